# Copyright 2026 The fxgroup Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact computation in free exponential groups over Z[t] and Z."""

from ._core import CapabilityError, Element, Error, Group, ParseError

__all__ = ["CapabilityError", "Element", "Error", "Group", "ParseError"]
__version__ = "0.1.0"

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

import pytest

import fxgroup
from fxgroup import Group


@pytest.fixture
def g():
    return Group("a,b")


def test_norm_and_equality(g):
    assert g.norm("a^(t)*a^(t)") == "a^(2*t)"
    assert g.eq("a^(t)*b", "a^(t+1)*a^-1*b")
    assert not g.eq("a^(t)", "b^(t)")
    assert g("a*a^-1").is_identity
    assert str(g("b*a^(t+1)*a^-1")) == "b*a^(t)"


def test_element_arithmetic(g):
    x, y = g("a^(t)*b"), g("b^-1*a^(t)")
    assert str(x * y) == "a^(2*t)"
    assert str(x.inverse()) == "b^-1*a^(-t)"
    assert (x * x.inverse()).is_identity
    assert str(g("a") ** "t") == "a^(t)"
    assert str(g("a^2") ** "t") == "a^(2*t)"
    assert x ** 2 == g("a^(t)*b*a^(t)*b")
    assert (x ** "t").level == 2
    assert len(x ** 2) == 2
    assert hash(x) == hash(g("a^(t+1)*a^-1*b"))
    assert repr(g("a")) == "Element('a')"


def test_structure(g):
    assert g.level("a^(t)") == 1
    assert g.length("a^(t)*b*a^(t)*b") == 2
    c, z, e = g.root("b^-1*a^(t)*b")
    assert (str(c), str(z), e) == ("b", "a", "t")
    c, z = g.cent("b^-1*a*b")
    assert (str(c), str(z)) == ("b", "a")
    assert g.comm("a^(t)", "a^(3*t^2+1)")
    assert not g.comm("a^(t)", "b")


def test_conjugacy(g):
    x, y = g("a^(t)*b"), g("b*a^(t)")
    c = g.conj(x, y)
    assert c is not None
    assert c.inverse() * x * c == y
    assert g.conj("a", "b") is None


def test_evaluation(g):
    assert g.eval("a^(t^2)*b*a^(-t)", 2) == "a^4*b*a^-2"
    assert g.eval("(a^(t)*b)^(t+1)", 3) == "a^3*b*a^3*b*a^3*b*a^3*b"
    with pytest.raises(fxgroup.Error):
        Group("a,b", ring="opaque")
    z = Group("a,b", ring="z")
    assert z.norm("a^3*a^-1") == "a^2"


def test_bindings_and_commands(g):
    assert str(g.let("x", "a^(t)*b")) == "a^(t)*b"
    assert g.norm("x*x") == "a^(t)*b*a^(t)*b"
    assert g.run("pow x ; t") == (0, "(a^(t)*b)^(t)")
    assert g.run("eq a ; b") == (1, "false")
    status, out = g.run("norm a^(q)")
    assert status == 2 and out == "unknown symbol 'q' at column 9"


def test_errors(g):
    with pytest.raises(fxgroup.ParseError):
        g("a^(q)")
    with pytest.raises(fxgroup.ParseError):
        g("a*")
    with pytest.raises(fxgroup.Error):
        Group("a,t")
    with pytest.raises(ValueError):
        g.root("1")
    with pytest.raises(fxgroup.Error):
        g.eq(Group("x,y")("x"), "a")

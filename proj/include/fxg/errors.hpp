/*
   Copyright 2026 The fxgroup Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fxg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `column()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : Error(what + " at column " + std::to_string(column)), column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// A name that is neither a declared generator nor a session binding.
class UnknownSymbolError : public ParseError {
 public:
  UnknownSymbolError(const std::string& name, std::size_t column)
      : ParseError("unknown symbol '" + name + "'", column), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Operation undefined on the identity element (root extraction, centralizers).
class IdentityInputError : public Error {
 public:
  using Error::Error;
};

/// The ring lacks a requested optional capability (integer evaluation).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Words or elements built over different alphabets were combined.
class AlphabetMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace fxg

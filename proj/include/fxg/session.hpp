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

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fxg/element.hpp"

namespace fxg {

using Bindings = std::map<std::string, Element, std::less<>>;

/// Parses
///   expr     := factor ('*' factor)*
///   factor   := atom ('^' exponent)?
///   atom     := name | '(' expr ')' | '1'
///   exponent := '(' poly ')' | signedInt
/// Names resolve to generators first, then to `bindings`. Reported columns
/// are 1-based and shifted by `column_offset`.
RawExpr parse_expression(std::string_view text, const Context& ctx, const Bindings* bindings = nullptr,
                         std::size_t column_offset = 0);

/// Exit status of a command.
enum Status : int { kTrue = 0, kFalse = 1, kError = 2 };

struct CommandResult {
  int status = kTrue;
  std::string output;
};

class Session {
 public:
  Session(Alphabet alphabet, std::shared_ptr<const Ring> ring, std::uint64_t seed = 1,
          std::vector<long> points = {-2, -1, 0, 1, 2, 3});

  const Context& context() const noexcept { return ctx_; }
  const Bindings& bindings() const noexcept { return bindings_; }

  RawExpr parse(std::string_view text, std::size_t column_offset = 0) const;
  Element evaluate(std::string_view text, std::size_t column_offset = 0) const;
  std::string format(const Element& g) const;

  /// Runs one command line. Errors are reported through the status.
  CommandResult run(std::string_view line);

 private:
  CommandResult dispatch(std::string_view command, std::string_view args, std::size_t offset);
  CommandResult selftest();

  Context ctx_;
  Bindings bindings_;
  std::uint64_t seed_;
  std::vector<long> points_;
};

/// Executes one command per line, skipping blank lines and `#` comments.
/// Each output line is prefixed with `ok:`, `no:` or `err:`. Returns 2 if
/// any command failed, 0 otherwise.
int run_batch(Session& session, std::istream& in, std::ostream& out);

}  // namespace fxg

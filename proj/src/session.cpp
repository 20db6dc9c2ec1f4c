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

#include "fxg/session.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include "fxg/errors.hpp"
#include "fxg/group_ops.hpp"
#include "fxg/oracle.hpp"

namespace fxg {

namespace {

struct Arg {
  std::string_view text;
  std::size_t offset;
};

Arg trimmed(std::string_view s, std::size_t offset) {
  std::size_t a = 0;
  while (a < s.size() && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  std::size_t b = s.size();
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return {s.substr(a, b - a), offset + a};
}

std::vector<Arg> split_args(std::string_view args, std::size_t offset, std::size_t expected,
                            std::string_view usage) {
  std::vector<Arg> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t semi = args.find(';', start);
    std::string_view piece = args.substr(start, semi == std::string_view::npos ? semi : semi - start);
    out.push_back(trimmed(piece, offset + start));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (out.size() != expected || (expected == 1 && out.front().text.empty()))
    throw Error("usage: " + std::string(usage));
  for (const auto& a : out)
    if (a.text.empty()) throw ParseError("empty argument", a.offset + 1);
  return out;
}

const char* truth(bool b) { return b ? "true" : "false"; }

}  // namespace

Session::Session(Alphabet alphabet, std::shared_ptr<const Ring> ring, std::uint64_t seed,
                 std::vector<long> points)
    : ctx_{std::move(alphabet), std::move(ring)}, seed_(seed), points_(std::move(points)) {}

RawExpr Session::parse(std::string_view text, std::size_t column_offset) const {
  return parse_expression(text, ctx_, &bindings_, column_offset);
}

Element Session::evaluate(std::string_view text, std::size_t column_offset) const {
  return normalize(parse(text, column_offset));
}

std::string Session::format(const Element& g) const { return fxg::format(g, ctx_.alphabet); }

CommandResult Session::run(std::string_view line) {
  Arg all = trimmed(line, 0);
  std::size_t end = 0;
  while (end < all.text.size() && !std::isspace(static_cast<unsigned char>(all.text[end]))) ++end;
  std::string_view command = all.text.substr(0, end);
  try {
    if (command.empty()) throw Error("empty command");
    return dispatch(command, all.text.substr(end), all.offset + end);
  } catch (const std::exception& e) {
    return {kError, e.what()};
  }
}

CommandResult Session::dispatch(std::string_view command, std::string_view args,
                                std::size_t offset) {
  auto one = [&](std::string_view usage) {
    auto a = split_args(args, offset, 1, usage);
    return evaluate(a[0].text, a[0].offset);
  };
  auto two = [&](std::string_view usage) {
    auto a = split_args(args, offset, 2, usage);
    return std::pair{evaluate(a[0].text, a[0].offset), evaluate(a[1].text, a[1].offset)};
  };

  if (command == "norm") return {kTrue, format(one("norm <expr>"))};
  if (command == "eq") {
    auto [g, h] = two("eq <expr> ; <expr>");
    bool r = equals(g, h);
    return {r ? kTrue : kFalse, truth(r)};
  }
  if (command == "comm") {
    auto [g, h] = two("comm <expr> ; <expr>");
    bool r = commutes(g, h);
    return {r ? kTrue : kFalse, truth(r)};
  }
  if (command == "conj") {
    auto [g, h] = two("conj <expr> ; <expr>");
    auto c = conjugate_test(g, h);
    if (!c) return {kFalse, "none"};
    return {kTrue, format(*c)};
  }
  if (command == "root") {
    RootDecomposition r = extract_root(one("root <expr>"));
    return {kTrue, format(r.conjugator) + " ; " + format(r.root.body) + " ; " + r.exponent.to_string()};
  }
  if (command == "cent") {
    CentralizerHandle c = centralizer(one("cent <expr>"));
    return {kTrue, format(c.conjugator) + " ; " + format(c.root.body)};
  }
  if (command == "level") return {kTrue, std::to_string(one("level <expr>").level())};
  if (command == "len") return {kTrue, std::to_string(syllable_length(one("len <expr>")))};
  if (command == "pow") {
    auto a = split_args(args, offset, 2, "pow <expr> ; <exponent>");
    Element g = evaluate(a[0].text, a[0].offset);
    RingElement alpha = ctx_.ring->parse(a[1].text, a[1].offset);
    return {kTrue, format(power(g, alpha))};
  }
  if (command == "eval") {
    if (!ctx_.ring->has_evaluation())
      throw CapabilityError("ring '" + ctx_.ring->name() + "' has no integer evaluations");
    if (args.find(';') == std::string_view::npos) {
      Element g = one("eval <expr> [; <point>]");
      std::string out;
      for (long k : points_) {
        if (!out.empty()) out += '\n';
        out += "t=" + std::to_string(k) + ": " + ctx_.alphabet.format(evaluate_hom(g, BigInt(k)));
      }
      return {kTrue, out};
    }
    auto a = split_args(args, offset, 2, "eval <expr> [; <point>]");
    Element g = evaluate(a[0].text, a[0].offset);
    RingElement k = parse_polynomial(a[1].text, false, a[1].offset);
    return {kTrue, ctx_.alphabet.format(evaluate_hom(g, k.constant_term()))};
  }
  if (command == "let") {
    Arg rest = trimmed(args, offset);
    std::size_t eq = rest.text.find('=');
    if (eq == std::string_view::npos) throw Error("usage: let <name> = <expr>");
    std::string name(trimmed(rest.text.substr(0, eq), 0).text);
    if (!is_valid_identifier(name)) throw ParseError("invalid name '" + name + "'", rest.offset + 1);
    if (name == "t" || ctx_.alphabet.find(name))
      throw ParseError("name '" + name + "' is reserved", rest.offset + 1);
    Arg body = trimmed(rest.text.substr(eq + 1), rest.offset + eq + 1);
    Element g = evaluate(body.text, body.offset);
    bindings_[name] = g;
    return {kTrue, name + " = " + format(g)};
  }
  if (command == "selftest") {
    if (!trimmed(args, 0).text.empty()) throw Error("usage: selftest");
    return selftest();
  }
  throw Error("unknown command '" + std::string(command) + "'");
}

CommandResult Session::selftest() {
  GenParams p;
  p.alphabet_size = ctx_.alphabet.size();
  p.max_level = ctx_.ring->name() == "z" ? 0 : 2;
  Rng rng(seed_);
  const int rounds = 50;
  int checks = 0;
  for (int i = 0; i < rounds; ++i) {
    auto level = [&] { return static_cast<std::uint32_t>(rng.uniform(0, p.max_level)); };
    Element g = normalize(random_expression(rng, p, level()));
    Element h = normalize(random_expression(rng, p, level()));
    RingElement a = p.max_level ? random_scalar(rng, p) : RingElement(static_cast<long>(rng.uniform(-3, 3)));
    RingElement b = p.max_level ? random_scalar(rng, p) : RingElement(static_cast<long>(rng.uniform(-3, 3)));
    if (!axiom_audit(g, h, a, b).passed())
      return {kFalse, "selftest failed: axiom audit on " + format(g) + " ; " + format(h)};
    if (!equals(normalize(obfuscate(g, seed_ + static_cast<std::uint64_t>(i), 10, p.alphabet_size)), g))
      return {kFalse, "selftest failed: obfuscation of " + format(g)};
    if (!equals(normalize(parse(format(g))), g))
      return {kFalse, "selftest failed: round trip of " + format(g)};
    checks += 3;
  }
  return {kTrue, "selftest passed (" + std::to_string(checks) + " checks)"};
}

int run_batch(Session& session, std::istream& in, std::ostream& out) {
  int code = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    CommandResult r = session.run(line);
    const char* prefix = r.status == kTrue ? "ok:" : r.status == kFalse ? "no:" : "err:";
    if (r.status == kError) code = 2;
    std::istringstream lines(r.output);
    std::string piece;
    bool any = false;
    while (std::getline(lines, piece)) {
      out << prefix << ' ' << piece << '\n';
      any = true;
    }
    if (!any) out << prefix << '\n';
    out.flush();
  }
  return code;
}

}  // namespace fxg

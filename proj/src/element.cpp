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

#include "fxg/element.hpp"

#include <algorithm>

#include "detail.hpp"
#include "fxg/errors.hpp"
#include "fxg/group_ops.hpp"

namespace fxg {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

const std::shared_ptr<const ElementNode>& identity_node() {
  static const auto node = [] {
    auto n = std::make_shared<ElementNode>();
    n->hash = mix(0, n->word.hash());
    return std::shared_ptr<const ElementNode>(n);
  }();
  return node;
}

// Degree first, then coefficients from the top down keyed as
// zero < positive < negative and by magnitude, matching the syllable order
// of words.
std::strong_ordering compare_exponents(const RingElement& a, const RingElement& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  auto key = [](const BigInt& c) { return c > 0 ? 1 : (c < 0 ? 2 : 0); };
  static const BigInt zero;
  auto i = a.terms().rbegin();
  auto j = b.terms().rbegin();
  while (i != a.terms().rend() || j != b.terms().rend()) {
    long di = i != a.terms().rend() ? static_cast<long>(i->degree) : -1;
    long dj = j != b.terms().rend() ? static_cast<long>(j->degree) : -1;
    long d = std::max(di, dj);
    const BigInt& x = di == d ? i->coeff : zero;
    const BigInt& y = dj == d ? j->coeff : zero;
    if (auto c = key(x) <=> key(y); c != 0) return c;
    if (int c = mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t()); c != 0) return c <=> 0;
    if (di == d) ++i;
    if (dj == d) ++j;
  }
  return std::strong_ordering::equal;
}

}  // namespace

Element::Element() : node_(identity_node()) {}

Element Element::from_word(Word w) {
  if (w.empty()) return {};
  auto n = std::make_shared<ElementNode>();
  n->word = std::move(w);
  n->hash = mix(0, n->word.hash());
  return Element(std::move(n));
}

Element Element::assemble(std::uint32_t level, std::vector<Element> separators,
                          std::vector<PowerFactor> factors) {
  if (factors.empty()) return separators.empty() ? Element() : separators.front();
  auto n = std::make_shared<ElementNode>();
  n->level = level;
  std::size_t h = mix(level, factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    h = mix(h, separators[i].hash());
    h = mix(h, factors[i].root.body.hash());
    h = mix(h, factors[i].exponent.hash());
  }
  h = mix(h, separators.back().hash());
  n->hash = h;
  n->separators = std::move(separators);
  n->factors = std::move(factors);
  return Element(std::move(n));
}

std::uint32_t Element::level() const noexcept { return node_->level; }
bool Element::is_identity() const noexcept { return node_->level == 0 && node_->word.empty(); }
const Word& Element::word() const noexcept { return node_->word; }
std::span<const Element> Element::separators() const noexcept { return node_->separators; }
std::span<const PowerFactor> Element::factors() const noexcept { return node_->factors; }
std::size_t Element::factor_count() const noexcept { return node_->factors.size(); }
std::size_t Element::hash() const noexcept { return node_->hash; }

bool operator==(const Element& a, const Element& b) {
  if (a.node_ == b.node_) return true;
  const ElementNode& x = *a.node_;
  const ElementNode& y = *b.node_;
  if (x.hash != y.hash || x.level != y.level) return false;
  if (x.level == 0) return x.word == y.word;
  return x.factors == y.factors && x.separators == y.separators;
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const ElementNode& x = *a.node_;
  const ElementNode& y = *b.node_;
  if (auto c = x.level <=> y.level; c != 0) return c;
  if (x.level == 0) return x.word <=> y.word;
  if (auto c = x.factors.size() <=> y.factors.size(); c != 0) return c;
  for (std::size_t i = 0; i < x.factors.size(); ++i) {
    if (auto c = x.separators[i] <=> y.separators[i]; c != 0) return c;
    if (auto c = x.factors[i].root <=> y.factors[i].root; c != 0) return c;
    if (auto c = compare_exponents(x.factors[i].exponent, y.factors[i].exponent); c != 0)
      return c;
  }
  return x.separators.back() <=> y.separators.back();
}

std::size_t syllable_length(const Element& g) {
  if (g.level() == 0) return static_cast<std::size_t>(g.word().length());
  return g.factor_count();
}

namespace {

void format_into(std::string& out, const Element& g, const Alphabet& alphabet) {
  auto append = [&out](const std::string& piece) {
    if (!out.empty()) out += '*';
    out += piece;
  };
  if (g.level() == 0) {
    if (!g.is_identity()) append(alphabet.format(g.word()));
    return;
  }
  for (std::size_t i = 0; i < g.factor_count(); ++i) {
    format_into(out, g.separators()[i], alphabet);
    const PowerFactor& p = g.factors()[i];
    const Element& body = p.root.body;
    std::string base;
    if (body.level() == 0 && body.word().syllable_count() == 1 &&
        body.word().syllables()[0].exp == 1)
      base = alphabet.name(body.word().syllables()[0].gen);
    else
      base = "(" + format(body, alphabet) + ")";
    append(base + "^(" + p.exponent.to_string() + ")");
  }
  format_into(out, g.separators().back(), alphabet);
}

}  // namespace

std::string format(const Element& g, const Alphabet& alphabet) {
  std::string out;
  format_into(out, g, alphabet);
  return out.empty() ? "1" : out;
}

RawExpr RawExpr::identity() { return {}; }

RawExpr RawExpr::gen(std::uint32_t index, int sign) {
  RawExpr e;
  e.kind_ = Kind::Gen;
  e.gen_ = index;
  e.sign_ = sign < 0 ? -1 : 1;
  return e;
}

RawExpr RawExpr::product(std::vector<RawExpr> children) {
  RawExpr e;
  e.kind_ = Kind::Product;
  e.children_ = std::make_shared<const std::vector<RawExpr>>(std::move(children));
  return e;
}

RawExpr RawExpr::inverse(RawExpr child) {
  RawExpr e;
  e.kind_ = Kind::Inverse;
  e.children_ = std::make_shared<const std::vector<RawExpr>>(1, std::move(child));
  return e;
}

RawExpr RawExpr::power(RawExpr child, RingElement exponent) {
  RawExpr e;
  e.kind_ = Kind::Power;
  e.children_ = std::make_shared<const std::vector<RawExpr>>(1, std::move(child));
  e.exponent_ = std::move(exponent);
  return e;
}

RawExpr RawExpr::from_word(const Word& w) {
  if (w.empty()) return identity();
  std::vector<RawExpr> parts;
  for (const auto& s : w.syllables()) {
    if (s.exp == 1)
      parts.push_back(gen(s.gen));
    else
      parts.push_back(power(gen(s.gen), RingElement(static_cast<long>(s.exp))));
  }
  if (parts.size() == 1) return parts.front();
  return product(std::move(parts));
}

RawExpr RawExpr::from_element(const Element& g) {
  if (g.level() == 0) return from_word(g.word());
  std::vector<RawExpr> parts;
  for (std::size_t i = 0; i < g.factor_count(); ++i) {
    if (!g.separators()[i].is_identity()) parts.push_back(from_element(g.separators()[i]));
    const PowerFactor& p = g.factors()[i];
    parts.push_back(power(from_element(p.root.body), p.exponent));
  }
  if (!g.separators().back().is_identity()) parts.push_back(from_element(g.separators().back()));
  if (parts.size() == 1) return parts.front();
  return product(std::move(parts));
}

namespace {

bool is_atom(const RawExpr& e) {
  switch (e.kind()) {
    case RawExpr::Kind::Identity:
      return true;
    case RawExpr::Kind::Gen:
      return e.sign() > 0;
    case RawExpr::Kind::Product:
      return e.children().empty() || (e.children().size() == 1 && is_atom(e.children().front()));
    default:
      return false;
  }
}

// `base` asks for something that may carry a `^` suffix.
void format_raw(std::string& out, const RawExpr& e, const Alphabet& alphabet, bool base) {
  if (base && !is_atom(e)) {
    out += '(';
    format_raw(out, e, alphabet, false);
    out += ')';
    return;
  }
  switch (e.kind()) {
    case RawExpr::Kind::Identity:
      out += '1';
      return;
    case RawExpr::Kind::Gen:
      out += alphabet.name(e.generator());
      if (e.sign() < 0) out += "^-1";
      return;
    case RawExpr::Kind::Product:
      if (e.children().empty()) {
        out += '1';
        return;
      }
      for (std::size_t i = 0; i < e.children().size(); ++i) {
        if (i) out += '*';
        format_raw(out, e.children()[i], alphabet, base);
      }
      return;
    case RawExpr::Kind::Inverse:
      format_raw(out, e.child(), alphabet, true);
      out += "^-1";
      return;
    case RawExpr::Kind::Power:
      format_raw(out, e.child(), alphabet, true);
      if (e.exponent().is_integer())
        out += '^' + e.exponent().to_string();
      else
        out += "^(" + e.exponent().to_string() + ")";
      return;
  }
}

}  // namespace

std::string format(const RawExpr& e, const Alphabet& alphabet) {
  std::string out;
  format_raw(out, e, alphabet, false);
  return out;
}

Element normalize(const RawExpr& e) {
  switch (e.kind()) {
    case RawExpr::Kind::Identity:
      return {};
    case RawExpr::Kind::Gen:
      return Element::from_word(Word::generator(e.generator(), e.sign()));
    case RawExpr::Kind::Product: {
      Element acc;
      for (const auto& c : e.children()) acc = multiply(acc, normalize(c));
      return acc;
    }
    case RawExpr::Kind::Inverse:
      return invert(normalize(e.child()));
    case RawExpr::Kind::Power:
      return power(normalize(e.child()), e.exponent());
  }
  return {};
}

Element reduced_form(const RawExpr& e) {
  if (e.kind() == RawExpr::Kind::Product) {
    Element acc;
    for (const auto& c : e.children()) acc = detail::reduced_multiply(acc, normalize(c));
    return acc;
  }
  if (e.kind() == RawExpr::Kind::Inverse) return detail::reduced_invert(normalize(e.child()));
  return normalize(e);
}

}  // namespace fxg

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

#include "fxg/ring.hpp"

#include <algorithm>
#include <cctype>

#include "fxg/errors.hpp"

namespace fxg {

RingElement::RingElement(long value) {
  if (value != 0) terms_.push_back({0, BigInt(value)});
}

RingElement::RingElement(const BigInt& value) {
  if (value != 0) terms_.push_back({0, value});
}

RingElement RingElement::monomial(const BigInt& coeff, std::uint32_t degree) {
  RingElement r;
  if (coeff != 0) r.terms_.push_back({degree, coeff});
  return r;
}

RingElement RingElement::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.degree < b.degree; });
  RingElement r;
  for (auto& term : terms) {
    if (!r.terms_.empty() && r.terms_.back().degree == term.degree) {
      r.terms_.back().coeff += term.coeff;
      if (r.terms_.back().coeff == 0) r.terms_.pop_back();
    } else if (term.coeff != 0) {
      r.terms_.push_back(std::move(term));
    }
  }
  return r;
}

BigInt RingElement::coefficient(std::uint32_t degree) const {
  for (const auto& term : terms_)
    if (term.degree == degree) return term.coeff;
  return 0;
}

std::pair<BigInt, RingElement> RingElement::split_integer() const {
  if (terms_.empty() || terms_[0].degree != 0) return {BigInt(0), *this};
  RingElement rest;
  rest.terms_.assign(terms_.begin() + 1, terms_.end());
  return {terms_[0].coeff, std::move(rest)};
}

BigInt RingElement::evaluate_at(const BigInt& k) const {
  // Horner over the sparse terms, highest degree first.
  BigInt acc = 0;
  std::uint32_t prev = terms_.empty() ? 0 : terms_.back().degree;
  BigInt kpow;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    mpz_pow_ui(kpow.get_mpz_t(), k.get_mpz_t(), prev - it->degree);
    acc = acc * kpow + it->coeff;
    prev = it->degree;
  }
  mpz_pow_ui(kpow.get_mpz_t(), k.get_mpz_t(), prev);
  return acc * kpow;
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  for (auto& term : r.terms_) term.coeff = -term.coeff;
  return r;
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  RingElement r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->degree < j->degree)) {
      r.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->degree < i->degree) {
      r.terms_.push_back(*j++);
    } else {
      BigInt c = i->coeff + j->coeff;
      if (c != 0) r.terms_.push_back({i->degree, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

RingElement operator*(const RingElement& a, const RingElement& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<RingElement::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) products.push_back({x.degree + y.degree, x.coeff * y.coeff});
  return RingElement::from_terms(std::move(products));
}

bool operator==(const RingElement& a, const RingElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].degree != b.terms_[i].degree || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

std::strong_ordering operator<=>(const RingElement& a, const RingElement& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  auto i = a.terms_.rbegin();
  auto j = b.terms_.rbegin();
  for (; i != a.terms_.rend() && j != b.terms_.rend(); ++i, ++j) {
    if (i->degree != j->degree) {
      // The side holding the higher degree compares by that coefficient's sign.
      if (i->degree > j->degree) return sgn(i->coeff) > 0 ? std::strong_ordering::greater
                                                          : std::strong_ordering::less;
      return sgn(j->coeff) > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    int c = cmp(i->coeff, j->coeff);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (i != a.terms_.rend())
    return sgn(i->coeff) > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  if (j != b.terms_.rend())
    return sgn(j->coeff) > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::size_t RingElement::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& term : terms_) {
    std::size_t c = mpz_get_ui(term.coeff.get_mpz_t()) ^ (sgn(term.coeff) < 0 ? 0x5bd1e995 : 0);
    c ^= mpz_sizeinbase(term.coeff.get_mpz_t(), 2) << 40;
    h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= term.degree + 0x7f4a7c15 + (h << 6) + (h >> 2);
  }
  return h;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool negative = sgn(it->coeff) < 0;
    BigInt magnitude = abs(it->coeff);
    if (negative) out += '-';
    else if (!first) out += '+';
    first = false;
    if (it->degree == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += 't';
    if (it->degree > 1) out += "^" + std::to_string(it->degree);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, bool allow_t, std::size_t offset)
      : text_(text), allow_t_(allow_t), offset_(offset) {}

  RingElement parse() {
    std::vector<RingElement::Term> terms;
    skip();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    terms.push_back(term(sign));
    for (;;) {
      skip();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(term(c == '-' ? -1 : 1));
    }
    return RingElement::from_terms(std::move(terms));
  }

 private:
  RingElement::Term term(int sign) {
    skip();
    BigInt coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = BigInt(digits());
      have_coeff = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (peek() != 't') fail("expected 't' after '*'");
      }
    }
    std::uint32_t degree = 0;
    if (peek() == 't') {
      if (!allow_t_) throw UnknownSymbolError("t", column());
      ++pos_;
      degree = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        skip();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        std::string d = digits();
        if (d.size() > 9) fail("exponent too large");
        degree = static_cast<std::uint32_t>(std::stoul(d));
      }
    } else if (!have_coeff) {
      if (std::isalpha(static_cast<unsigned char>(peek()))) {
        std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        throw UnknownSymbolError(std::string(text_.substr(start, pos_ - start)), start + 1 + offset_);
      }
      fail("expected a term");
    }
    if (sign < 0) coeff = -coeff;
    return {degree, coeff};
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::size_t column() const { return pos_ + 1 + offset_; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, column()); }

  std::string_view text_;
  bool allow_t_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElement parse_polynomial(std::string_view text, bool allow_indeterminate,
                             std::size_t column_offset) {
  return PolyParser(text, allow_indeterminate, column_offset).parse();
}

BigInt Ring::evaluate_at(const RingElement& a, const BigInt& k) const {
  if (!has_evaluation()) throw CapabilityError("ring '" + name() + "' has no integer evaluation");
  return a.evaluate_at(k);
}

RingElement PolynomialRing::parse(std::string_view text, std::size_t column_offset) const {
  return parse_polynomial(text, true, column_offset);
}

RingElement IntegerRing::parse(std::string_view text, std::size_t column_offset) const {
  return parse_polynomial(text, false, column_offset);
}

std::shared_ptr<const Ring> make_ring(std::string_view name) {
  if (name == "zt") return std::make_shared<PolynomialRing>();
  if (name == "z") return std::make_shared<IntegerRing>();
  throw Error("unknown ring '" + std::string(name) + "' (expected zt or z)");
}

}  // namespace fxg

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

#include "fxg/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "fxg/errors.hpp"
#include "fxg/group_ops.hpp"

namespace fxg {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("empty range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return x % n;
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  return lo + static_cast<std::int64_t>(below(span));
}

void validate(const GenParams& p) {
  if (p.alphabet_size == 0 || p.max_syllables == 0 || p.max_degree == 0 || p.max_coefficient <= 0)
    throw std::invalid_argument("generation bounds must be positive");
}

Word random_word(Rng& rng, const GenParams& p, std::size_t max_syllables) {
  std::vector<Syllable> syl;
  auto count = rng.uniform(1, static_cast<std::int64_t>(std::max<std::size_t>(1, max_syllables)));
  for (std::int64_t i = 0; i < count; ++i) {
    auto gen = static_cast<std::uint32_t>(rng.below(p.alphabet_size));
    std::int64_t e = rng.uniform(1, 2);
    syl.push_back({gen, rng.chance(1, 2) ? e : -e});
  }
  return Word(syl);
}

RingElement random_exponent(Rng& rng, const GenParams& p) {
  auto degree = static_cast<std::uint32_t>(rng.uniform(1, p.max_degree));
  std::vector<RingElement::Term> terms;
  for (std::uint32_t d = 0; d <= degree; ++d) {
    long c = rng.uniform(-p.max_coefficient, p.max_coefficient);
    if (d == degree && c == 0) c = rng.chance(1, 2) ? 1 : -1;
    terms.push_back({d, BigInt(c)});
  }
  return RingElement::from_terms(std::move(terms));
}

RingElement random_scalar(Rng& rng, const GenParams& p) {
  if (rng.chance(1, 4)) return RingElement(static_cast<long>(rng.uniform(-3, 3)));
  return random_exponent(rng, p);
}

RawExpr random_expression(Rng& rng, const GenParams& p, std::uint32_t level) {
  if (level == 0) return RawExpr::from_word(random_word(rng, p, p.max_syllables));
  auto pieces = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(p.max_syllables)));
  auto forced = rng.below(pieces);
  std::vector<RawExpr> parts;
  for (std::size_t i = 0; i < pieces; ++i) {
    if (i == forced || rng.chance(1, 2)) {
      RawExpr base = random_expression(rng, p, level - 1);
      parts.push_back(RawExpr::power(std::move(base), random_exponent(rng, p)));
    } else {
      auto lower = static_cast<std::uint32_t>(rng.below(level));
      parts.push_back(random_expression(rng, p, lower));
    }
  }
  if (parts.size() == 1) return parts.front();
  return RawExpr::product(std::move(parts));
}

RawExpr random_element(const GenParams& p) {
  validate(p);
  Rng rng(p.seed);
  auto level = static_cast<std::uint32_t>(rng.uniform(0, p.max_level));
  return random_expression(rng, p, level);
}

namespace {

class Obfuscator {
 public:
  Obfuscator(std::uint64_t seed, std::size_t alphabet_size) : rng_(seed) {
    params_.alphabet_size = alphabet_size;
    params_.max_syllables = 2;
    params_.max_degree = 2;
    params_.max_coefficient = 2;
  }

  RawExpr step(const RawExpr& e) {
    std::size_t target = rng_.below(count(e));
    std::size_t index = 0;
    return visit(e, index, target);
  }

 private:
  static std::size_t count(const RawExpr& e) {
    std::size_t n = 1;
    if (e.kind() == RawExpr::Kind::Product || e.kind() == RawExpr::Kind::Inverse ||
        e.kind() == RawExpr::Kind::Power)
      for (const auto& c : e.children()) n += count(c);
    return n;
  }

  RawExpr visit(const RawExpr& e, std::size_t& index, std::size_t target) {
    if (index++ == target) return rewrite(e);
    switch (e.kind()) {
      case RawExpr::Kind::Product: {
        std::vector<RawExpr> children;
        for (const auto& c : e.children()) children.push_back(visit(c, index, target));
        return RawExpr::product(std::move(children));
      }
      case RawExpr::Kind::Inverse:
        return RawExpr::inverse(visit(e.child(), index, target));
      case RawExpr::Kind::Power:
        return RawExpr::power(visit(e.child(), index, target), e.exponent());
      default:
        return e;
    }
  }

  RawExpr small_word() {
    if (rng_.chance(1, 3)) return random_expression(rng_, params_, 1);
    return RawExpr::from_word(random_word(rng_, params_, 2));
  }

  RawExpr rewrite(const RawExpr& e) {
    RawExpr base;
    RingElement a;
    if (e.kind() == RawExpr::Kind::Power) {
      base = e.child();
      a = e.exponent();
    } else if (e.kind() == RawExpr::Kind::Gen) {
      base = RawExpr::gen(e.generator());
      a = RingElement(static_cast<long>(e.sign()));
    } else if (e.kind() == RawExpr::Kind::Inverse) {
      return RawExpr::power(e.child(), RingElement(-1L));
    } else {
      RawExpr w = small_word();
      if (rng_.chance(1, 2)) return RawExpr::product({e, w, RawExpr::inverse(w)});
      return RawExpr::product({w, RawExpr::inverse(w), e});
    }
    switch (rng_.below(6)) {
      case 0: {  // a = b + (a - b)
        RingElement b = random_scalar(rng_, params_);
        return RawExpr::product({RawExpr::power(base, b), RawExpr::power(base, a - b)});
      }
      case 1: {  // insert w * w^-1
        RawExpr w = small_word();
        return RawExpr::product({RawExpr::power(base, a), w, RawExpr::inverse(w)});
      }
      case 2: {  // h (h^-1 x h)^a h^-1
        RawExpr h = small_word();
        RawExpr inner = RawExpr::product({RawExpr::inverse(h), base, h});
        return RawExpr::product({h, RawExpr::power(inner, a), RawExpr::inverse(h)});
      }
      case 3: {  // x^n x^a x^-n
        long n = rng_.uniform(1, 2);
        return RawExpr::product({RawExpr::power(base, RingElement(n)), RawExpr::power(base, a),
                                 RawExpr::power(base, RingElement(-n))});
      }
      case 4: {  // x^(t q) = (x^t)^q
        if (a.constant_term() == 0 && !a.is_zero()) {
          std::vector<RingElement::Term> terms;
          for (const auto& term : a.terms()) terms.push_back({term.degree - 1, term.coeff});
          RingElement q = RingElement::from_terms(std::move(terms));
          return RawExpr::power(RawExpr::power(base, RingElement::indeterminate()), q);
        }
        RawExpr w = small_word();
        return RawExpr::product({w, RawExpr::inverse(w), RawExpr::power(base, a)});
      }
      default: {  // (x x^b)^a x^(-ab)
        RingElement b = random_scalar(rng_, params_);
        RawExpr both = RawExpr::product({base, RawExpr::power(base, b)});
        return RawExpr::product({RawExpr::power(both, a), RawExpr::power(base, -(a * b))});
      }
    }
  }

  Rng rng_;
  GenParams params_;
};

}  // namespace

RawExpr obfuscate(const Element& g, std::uint64_t seed, std::size_t steps,
                  std::size_t alphabet_size) {
  RawExpr e = RawExpr::from_element(g);
  Obfuscator ob(seed, alphabet_size);
  for (std::size_t i = 0; i < steps; ++i) e = ob.step(e);
  return e;
}

AuditReport axiom_audit(const Element& g, const Element& h, const RingElement& alpha,
                        const RingElement& beta) {
  AuditReport r;
  r.unit = equals(power(g, RingElement(1L)), g) && power(g, RingElement()).is_identity();
  r.sum = equals(power(g, alpha + beta), multiply(power(g, alpha), power(g, beta)));
  r.product = equals(power(g, alpha * beta), power(power(g, alpha), beta));
  r.conjugation = equals(power(conjugate(g, h), alpha), conjugate(power(g, alpha), h));
  if (commutes(g, h))
    r.commuting = equals(power(multiply(g, h), alpha), multiply(power(g, alpha), power(h, alpha)));
  return r;
}

std::string to_string(Verdict v) {
  return v == Verdict::Distinct ? "distinct" : "indistinguishable-at-sample";
}

Verdict separation_probe(const Element& g, const Element& h, const std::vector<long>& points) {
  for (long k : points)
    if (evaluate_hom(g, BigInt(k)) != evaluate_hom(h, BigInt(k))) return Verdict::Distinct;
  return Verdict::IndistinguishableAtSample;
}

long max_exponent_degree(const Element& g) {
  long d = 0;
  for (const auto& s : g.separators()) d = std::max(d, max_exponent_degree(s));
  for (const auto& f : g.factors())
    d = std::max({d, f.exponent.degree(), max_exponent_degree(f.root.body)});
  return d;
}

Verdict separation_probe(const Element& g, const Element& h) {
  long d = std::max(max_exponent_degree(g), max_exponent_degree(h));
  std::vector<long> points;
  for (long k = 0; k < d + 2; ++k) points.push_back(k);
  return separation_probe(g, h, points);
}

std::vector<TestVector> read_test_vectors(std::istream& in) {
  std::vector<TestVector> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    TestVector v;
    v.line = number;
    if (line.rfind("EXPECT_EQ", 0) == 0)
      v.expect_equal = true;
    else if (line.rfind("EXPECT_NE", 0) == 0)
      v.expect_equal = false;
    else
      throw ParseError("expected EXPECT_EQ or EXPECT_NE on line " + std::to_string(number), first + 1);
    std::string rest = line.substr(9);
    auto semi = rest.find(';');
    if (semi == std::string::npos)
      throw ParseError("missing ';' on line " + std::to_string(number), first + 10);
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    v.lhs = trim(rest.substr(0, semi));
    v.rhs = trim(rest.substr(semi + 1));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace fxg

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
#include <istream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fxg/element.hpp"

namespace fxg {

/// Deterministic pseudo-random source. Bounded draws are implemented here
/// rather than through the standard distributions so that sequences are
/// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Uniform on [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

struct GenParams {
  std::size_t alphabet_size = 2;
  std::uint32_t max_level = 2;
  std::size_t max_syllables = 3;
  std::uint32_t max_degree = 2;
  long max_coefficient = 3;
  std::uint64_t seed = 1;
};

/// Throws std::invalid_argument unless every bound is positive.
void validate(const GenParams& p);

/// A random expression whose normal form has level <= p.max_level.
RawExpr random_element(const GenParams& p);
/// Same, drawing from an existing generator and aiming at `level`.
RawExpr random_expression(Rng& rng, const GenParams& p, std::uint32_t level);
Word random_word(Rng& rng, const GenParams& p, std::size_t max_syllables);
/// A random ring element outside Z.
RingElement random_exponent(Rng& rng, const GenParams& p);
/// A random ring element, integer with probability 1/4.
RingElement random_scalar(Rng& rng, const GenParams& p);

/// An expression tree equal to g, produced by `steps` random applications
/// of the A-group axioms read backwards: exponent splitting, insertion of
/// w * w^-1, conjugation and commutation rewrites, nested powers, and the
/// commuting-product rule.
RawExpr obfuscate(const Element& g, std::uint64_t seed, std::size_t steps,
                  std::size_t alphabet_size = 2);

struct AuditReport {
  bool unit = false;         // g^1 = g and g^0 = 1
  bool sum = false;          // g^(a+b) = g^a g^b
  bool product = false;      // g^(ab) = (g^a)^b
  bool conjugation = false;  // (h^-1 g h)^a = h^-1 g^a h
  std::optional<bool> commuting;  // (gh)^a = g^a h^a, only when [g,h] = 1
  bool passed() const { return unit && sum && product && conjugation && commuting.value_or(true); }
};
AuditReport axiom_audit(const Element& g, const Element& h, const RingElement& alpha,
                        const RingElement& beta);

enum class Verdict { Distinct, IndistinguishableAtSample };
std::string to_string(Verdict v);

/// Compares images under t := k for each sample point. Never claims
/// equality.
Verdict separation_probe(const Element& g, const Element& h, const std::vector<long>& points);
/// Samples d + 2 points where d bounds the exponent degrees of g and h.
Verdict separation_probe(const Element& g, const Element& h);
long max_exponent_degree(const Element& g);

/// One case of a test-vector file: `EXPECT_EQ <expr> ; <expr>` or
/// `EXPECT_NE <expr> ; <expr>`; `#` starts a comment.
struct TestVector {
  bool expect_equal = true;
  std::string lhs;
  std::string rhs;
  std::size_t line = 0;
};
std::vector<TestVector> read_test_vectors(std::istream& in);

}  // namespace fxg

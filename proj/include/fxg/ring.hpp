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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fxg {

using BigInt = mpz_class;

/// Exponent values: integer polynomials in one indeterminate `t`, stored
/// sparsely as (degree, coefficient) pairs in ascending degree order with no
/// zero coefficients. The zero polynomial has no terms. Values are immutable
/// once built and safe to share between threads.
class RingElement {
 public:
  struct Term {
    std::uint32_t degree;
    BigInt coeff;
  };

  RingElement() = default;
  RingElement(long value);  // NOLINT(google-explicit-constructor)
  RingElement(const BigInt& value);  // NOLINT(google-explicit-constructor)

  /// `coeff * t^degree`.
  static RingElement monomial(const BigInt& coeff, std::uint32_t degree);
  /// Builds from arbitrary (degree, coefficient) pairs, merging duplicates.
  static RingElement from_terms(std::vector<Term> terms);
  static RingElement indeterminate() { return monomial(1, 1); }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_integer() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].degree == 0);
  }
  /// -1 for the zero polynomial.
  long degree() const noexcept {
    return terms_.empty() ? -1 : static_cast<long>(terms_.back().degree);
  }
  BigInt coefficient(std::uint32_t degree) const;
  BigInt constant_term() const { return coefficient(0); }

  /// a = n + r with n the constant term and r the zero-constant-term part.
  std::pair<BigInt, RingElement> split_integer() const;

  /// Substitutes t := k.
  BigInt evaluate_at(const BigInt& k) const;

  RingElement operator-() const;
  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  RingElement& operator+=(const RingElement& b) { return *this = *this + b; }

  friend bool operator==(const RingElement& a, const RingElement& b);
  /// Total order: by degree, then coefficients from the top degree down.
  friend std::strong_ordering operator<=>(const RingElement& a, const RingElement& b);

  std::size_t hash() const noexcept;

  /// Canonical text: descending degree, `*` between coefficient and `t`,
  /// no spaces, `0` for zero. Example: `3*t^2-t+1`.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Parses the polynomial grammar
///   poly := term (('+'|'-') term)*
///   term := coeff | coeff? '*'? 't' ('^' nat)?
/// with optional leading sign and insignificant whitespace. Columns in
/// errors are 1-based and offset by `column_offset`.
RingElement parse_polynomial(std::string_view text, bool allow_indeterminate = true,
                             std::size_t column_offset = 0);

/// The exponent-ring contract. Arithmetic lives on `RingElement` values and
/// is shared by every ring; a ring decides which values are legal, how they
/// parse, and whether integer retractions are available.
class Ring {
 public:
  virtual ~Ring() = default;

  virtual std::string name() const = 0;
  virtual RingElement parse(std::string_view text, std::size_t column_offset = 0) const = 0;
  virtual bool contains(const RingElement& a) const = 0;
  /// True when `evaluate_at` realises ring homomorphisms onto Z.
  virtual bool has_evaluation() const = 0;
  virtual BigInt evaluate_at(const RingElement& a, const BigInt& k) const;

  std::string format(const RingElement& a) const { return a.to_string(); }
  RingElement zero() const { return {}; }
  RingElement one() const { return RingElement(1L); }
  RingElement add(const RingElement& a, const RingElement& b) const { return a + b; }
  RingElement negate(const RingElement& a) const { return -a; }
  RingElement multiply(const RingElement& a, const RingElement& b) const { return a * b; }
  bool is_equal(const RingElement& a, const RingElement& b) const { return a == b; }
  bool is_integer(const RingElement& a) const { return a.is_integer(); }
  std::pair<BigInt, RingElement> split_integer(const RingElement& a) const {
    return a.split_integer();
  }
};

/// Z[t]; the transversal of A modulo Z is the zero-constant-term part.
class PolynomialRing final : public Ring {
 public:
  std::string name() const override { return "zt"; }
  RingElement parse(std::string_view text, std::size_t column_offset = 0) const override;
  bool contains(const RingElement&) const override { return true; }
  bool has_evaluation() const override { return true; }
};

/// The degenerate ring Z: every exponent is an integer, so the exponential
/// group collapses to the ordinary free group.
class IntegerRing final : public Ring {
 public:
  std::string name() const override { return "z"; }
  RingElement parse(std::string_view text, std::size_t column_offset = 0) const override;
  bool contains(const RingElement& a) const override { return a.is_integer(); }
  bool has_evaluation() const override { return true; }
};

/// "zt" or "z"; throws `Error` for anything else.
std::shared_ptr<const Ring> make_ring(std::string_view name);

}  // namespace fxg

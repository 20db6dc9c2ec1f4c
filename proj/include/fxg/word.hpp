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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fxg {

/// One run `gen^exp` of a word. `exp` is never zero inside a reduced word.
struct Syllable {
  std::uint32_t gen;
  std::int64_t exp;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A freely reduced word of F(X) in run-length form: adjacent syllables
/// carry distinct generators. The empty word is the identity.
class Word {
 public:
  Word() = default;
  /// Freely reduces an arbitrary syllable sequence.
  explicit Word(std::span<const Syllable> syllables);
  static Word generator(std::uint32_t gen, std::int64_t exp = 1);

  std::span<const Syllable> syllables() const noexcept { return syl_; }
  bool empty() const noexcept { return syl_.empty(); }
  std::size_t syllable_count() const noexcept { return syl_.size(); }
  /// Total number of letters.
  std::int64_t length() const noexcept;
  std::size_t hash() const noexcept;

  Word inverse() const;
  /// Letters [from, from + count).
  Word slice(std::int64_t from, std::int64_t count) const;
  /// The word read cyclically starting at letter `offset`; requires a
  /// cyclically reduced word.
  Word rotate(std::int64_t offset) const;

  friend Word operator*(const Word& u, const Word& w);
  friend bool operator==(const Word&, const Word&) = default;
  /// Fixed total order: letter length, then syllables compared by
  /// (generator index, sign, |exponent|).
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  void push(Syllable s);
  std::vector<Syllable> syl_;
};

Word power(const Word& w, std::int64_t n);

/// w = conjugator^-1 * core * conjugator with `core` cyclically reduced
/// letter-wise (first letter is not the inverse of the last).
struct CyclicReduction {
  Word conjugator;
  Word core;
};
CyclicReduction free_cyclic_reduce(const Word& w);

/// w = root^exponent with exponent >= 1 maximal. Throws on the identity.
struct WordRoot {
  Word root;
  std::int64_t exponent;
};
WordRoot free_primitive_root(const Word& w);

/// k with u = v^k, if any. Requires v non-empty.
std::optional<std::int64_t> free_power_membership(const Word& u, const Word& v);

/// c with w = c^-1 u c, if u and w are conjugate in F(X).
std::optional<Word> free_conjugacy(const Word& u, const Word& w);

/// Canonical representative of the conjugacy class of a cyclically reduced
/// word: rotates so that the first and last syllables carry different
/// generators, then takes the least syllable-boundary rotation. With
/// `allow_inverse` the inverse word's rotations compete too.
/// Returns (representative, rotation prefix P, inverted) where
/// representative = P^-1 * w^(inverted ? -1 : 1) * P.
struct CanonicalRotation {
  Word word;
  Word prefix;
  bool inverted;
};
CanonicalRotation canonical_rotation(const Word& cyclically_reduced, bool allow_inverse);

/// Generator names. Names are unique identifiers distinct from `t`.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);
  /// Parses "a,b,c".
  static Alphabet parse(std::string_view list);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::uint32_t gen) const { return names_.at(gen); }
  std::optional<std::uint32_t> find(std::string_view name) const;
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Throws AlphabetMismatchError when a generator index is out of range.
  void check(const Word& w) const;
  Word multiply(const Word& u, const Word& w) const;

  /// `a^2*b^-1*a`, or `1` for the identity.
  std::string format(const Word& w) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

bool is_valid_identifier(std::string_view name);

}  // namespace fxg

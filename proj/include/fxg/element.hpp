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
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fxg/ring.hpp"
#include "fxg/word.hpp"

namespace fxg {

struct ElementNode;
struct PowerFactor;

/// An element of the free exponential group in its unique normal form.
///
/// Level 0 elements are reduced free words. An element of level L >= 1 is
/// an alternating product u_1 p_1 u_2 ... p_m u_{m+1} where every u_i has
/// level < L and every p_i = v_i^{a_i} is a power of a root element v_i of
/// level exactly L - 1 with a_i outside Z. Separators are fixed
/// representatives of their cosets, so equal elements are structurally equal.
class Element {
 public:
  /// The identity.
  Element();
  static Element from_word(Word w);

  std::uint32_t level() const noexcept;
  bool is_identity() const noexcept;

  /// Level 0 content; empty for composite elements.
  const Word& word() const noexcept;
  /// Separators u_1 .. u_{m+1}; empty at level 0.
  std::span<const Element> separators() const noexcept;
  std::span<const PowerFactor> factors() const noexcept;
  std::size_t factor_count() const noexcept;

  std::size_t hash() const noexcept;
  const ElementNode* node() const noexcept { return node_.get(); }

  friend bool operator==(const Element& a, const Element& b);
  /// Fixed total order: level, then letter order at level 0, otherwise
  /// factor count followed by separators and factors left to right.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

  /// Assembles a composite without any normalisation. The caller guarantees
  /// the parts already form a valid normal form (or a reduced form for
  /// internal use).
  static Element assemble(std::uint32_t level, std::vector<Element> separators,
                          std::vector<PowerFactor> factors);

 private:
  explicit Element(std::shared_ptr<const ElementNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const ElementNode> node_;
};

/// A canonical primitive cyclically reduced representative of its
/// conjugacy class; powers of roots are the non-word content of the group.
struct RootElement {
  Element body;
  std::uint32_t level() const noexcept { return body.level(); }
  friend bool operator==(const RootElement&, const RootElement&) = default;
  friend std::strong_ordering operator<=>(const RootElement& a, const RootElement& b) {
    return a.body <=> b.body;
  }
};

struct PowerFactor {
  RootElement root;
  RingElement exponent;
  friend bool operator==(const PowerFactor&, const PowerFactor&) = default;
};

struct ElementNode {
  std::uint32_t level = 0;
  Word word;
  std::vector<Element> separators;
  std::vector<PowerFactor> factors;
  std::size_t hash = 0;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept { return e.hash(); }
};

/// Letter length at level 0, number of power factors above it.
std::size_t syllable_length(const Element& g);

/// Group context for text conversion.
struct Context {
  Alphabet alphabet;
  std::shared_ptr<const Ring> ring;
};

std::string format(const Element& g, const Alphabet& alphabet);

/// Unnormalised expression tree.
class RawExpr {
 public:
  enum class Kind { Identity, Gen, Product, Inverse, Power };

  static RawExpr identity();
  static RawExpr gen(std::uint32_t index, int sign = 1);
  static RawExpr product(std::vector<RawExpr> children);
  static RawExpr inverse(RawExpr child);
  static RawExpr power(RawExpr child, RingElement exponent);
  /// The word as a product of generator letters.
  static RawExpr from_word(const Word& w);
  /// A tree that normalises back to `g`.
  static RawExpr from_element(const Element& g);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t generator() const noexcept { return gen_; }
  int sign() const noexcept { return sign_; }
  const std::vector<RawExpr>& children() const noexcept { return *children_; }
  const RawExpr& child() const { return children_->front(); }
  const RingElement& exponent() const noexcept { return exponent_; }

 private:
  Kind kind_ = Kind::Identity;
  std::uint32_t gen_ = 0;
  int sign_ = 1;
  std::shared_ptr<const std::vector<RawExpr>> children_;
  RingElement exponent_;
};

std::string format(const RawExpr& e, const Alphabet& alphabet);

/// Normal form of an expression tree.
Element normalize(const RawExpr& e);

/// Like normalize, but the outermost product is folded without fixing
/// separator representatives. The result is a valid reduced form whose
/// top-level separators are arbitrary within their cosets.
Element reduced_form(const RawExpr& e);

Element multiply(const Element& g, const Element& h);
Element invert(const Element& g);
Element integer_power(const Element& g, std::int64_t n);

/// Checks the structural side conditions of a normal form: separator and
/// root levels, non-integer exponents, absorbability of separators between
/// equal roots, and that every separator is its own coset representative.
bool audit_normal_form(const Element& g);

}  // namespace fxg

template <>
struct std::hash<fxg::Element> {
  std::size_t operator()(const fxg::Element& e) const noexcept { return e.hash(); }
};

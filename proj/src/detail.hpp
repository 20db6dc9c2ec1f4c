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

// Internal machinery shared by the element and group layers.

#include <cstdint>
#include <optional>
#include <vector>

#include "fxg/element.hpp"

namespace fxg::detail {

/// Mutable view of an element as parts over a fixed level.
struct Parts {
  std::uint32_t level = 0;
  std::vector<Element> separators;
  std::vector<PowerFactor> factors;
};

/// Treats `g` as an element of level `level` >= g.level().
Parts lift(const Element& g, std::uint32_t level);
/// Collapses parts without factors to their single separator.
Element finish(Parts parts);

/// Size used for coset minimisation inside the group of level `level`:
/// letter length at level 0, factor count of level-`level` elements above.
std::size_t size_at(const Element& x, std::uint32_t level);
/// Translation length of a root body in the same units.
std::size_t translation_length(const Element& root);

/// x = left^alpha * rep * right^beta with rep the least element of the
/// double coset <left> x <right>. Either root may be absent.
struct Coset {
  std::int64_t alpha = 0;
  Element rep;
  std::int64_t beta = 0;
};
Coset dcrep(const Element* left, const Element& x, const Element* right, std::uint32_t level);

/// Product as a reduced form: every part is a normal form and no
/// cancellation is possible, but top-level separators are not moved to
/// their coset representatives.
Element reduced_multiply(const Element& g, const Element& h);
Element reduced_invert(const Element& g);
/// Moves every top-level separator of a reduced form to its representative.
Element canonicalize(const Element& reduced);
void canonicalize_separator(Parts& parts, std::size_t index);

/// k with x = v^k for a root body v, if any.
std::optional<std::int64_t> power_membership(const Element& x, const Element& root);
/// Normal form of root^k.
Element root_power(const Element& root, std::int64_t k);

std::int64_t to_int64(const BigInt& value);

/// Cyclic sequence f_0 s_0 f_1 s_1 ... f_{m-1} s_{m-1} of a hyperbolic
/// element of level `level`.
struct CyclicForm {
  std::uint32_t level = 0;
  std::vector<PowerFactor> factors;
  std::vector<Element> separators;
  std::size_t size() const noexcept { return factors.size(); }
  friend bool operator==(const CyclicForm&, const CyclicForm&) = default;
};

/// Normal form of the linear product starting at factor `start`.
Element linear_form(const CyclicForm& form, std::size_t start);
/// Normal form of f_0 s_0 ... f_{count-1} s_{count-1}.
Element prefix_product(const CyclicForm& form, std::size_t count);
CyclicForm rotated(const CyclicForm& form, std::size_t start);
/// Fixes every cyclic separator to its representative. Returns c with
/// input = c^-1 * output * c.
Element gauge_fix(CyclicForm& form);

/// g = conjugator^-1 * core * conjugator with core cyclically reduced.
struct Core {
  enum class Kind { Free, Elliptic, Hyperbolic };
  Kind kind = Kind::Free;
  Element conjugator;
  Word word;            // Free
  PowerFactor power;    // Elliptic: a single factor v^a
  CyclicForm cyclic;    // Hyperbolic, gauge fixed
  Element element() const;
};
Core cyclic_core(const Element& g);

/// Canonical representative of the conjugacy class: g = c^-1 * rep * c.
struct ClassRep {
  Element rep;
  Element conjugator;
};
ClassRep class_representative(const Element& g);

/// Cache control for the coset search memo.
void clear_caches();

}  // namespace fxg::detail

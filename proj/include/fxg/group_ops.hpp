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

#include <optional>

#include "fxg/element.hpp"

namespace fxg {

/// g = conjugator^-1 * root^exponent * conjugator.
struct RootDecomposition {
  Element conjugator;
  RootElement root;
  RingElement exponent;
};

/// C(g) = conjugator^-1 * root^A * conjugator.
struct CentralizerHandle {
  Element conjugator;
  RootElement root;
  bool contains(const Element& h) const;
};

/// g = conjugator^-1 * core * conjugator.
struct CoreDecomposition {
  Element conjugator;
  Element core;
};

RootDecomposition extract_root(const Element& g);

/// The A-action g^alpha.
Element power(const Element& g, const RingElement& alpha);

/// Equality of group elements. Normal forms are unique, so this is a
/// structural comparison.
bool equals(const Element& g, const Element& h);
/// Equality decided as g * h^-1 == 1.
bool equals_by_identity(const Element& g, const Element& h);
/// Equality of two reduced forms by solving for the integer shifts that
/// relate them; accepts forms whose separators are not coset
/// representatives (see reduced_form).
bool equals_by_matching(const Element& g, const Element& h);

/// g^-1 h^-1 g h.
Element commutator(const Element& g, const Element& h);
/// w^-1 g w.
Element conjugate(const Element& g, const Element& w);

bool commutes(const Element& g, const Element& h);
bool commutes_by_commutator(const Element& g, const Element& h);

CentralizerHandle centralizer(const Element& g);
/// True iff x lies in root^A.
bool in_root_module(const Element& x, const RootElement& root);

CoreDecomposition cyclic_reduce(const Element& g);

/// Canonical representative of the conjugacy class of g.
CoreDecomposition conjugacy_representative(const Element& g);

/// Some c with h = c^-1 g c, or nothing when g and h are not conjugate.
std::optional<Element> conjugate_test(const Element& g, const Element& h);

/// Image under t := k.
Word evaluate_hom(const Element& g, const BigInt& k);

}  // namespace fxg

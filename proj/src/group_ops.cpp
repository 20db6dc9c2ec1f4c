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

#include "fxg/group_ops.hpp"

#include "detail.hpp"
#include "fxg/errors.hpp"

namespace fxg {

namespace {

Element factor_element(const RootElement& root, RingElement exponent) {
  return Element::assemble(root.level() + 1, {Element(), Element()},
                           {PowerFactor{root, std::move(exponent)}});
}

RootDecomposition hyperbolic_root(const detail::Core& core) {
  const detail::CyclicForm& f = core.cyclic;
  std::size_t m = f.size();
  std::size_t d = m;
  for (std::size_t p = 1; p < m; ++p) {
    if (m % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < m && periodic; ++i)
      periodic = f.factors[i] == f.factors[i % p] && f.separators[i] == f.separators[i % p];
    if (periodic) {
      d = p;
      break;
    }
  }
  detail::CyclicForm r;
  r.level = f.level;
  r.factors.assign(f.factors.begin(), f.factors.begin() + static_cast<std::ptrdiff_t>(d));
  r.separators.assign(f.separators.begin(), f.separators.begin() + static_cast<std::ptrdiff_t>(d));
  auto k = static_cast<long>(m / d);

  // R = T z^sign T^-1 for the chosen candidate z.
  Element z = detail::linear_form(r, 0);
  Element t;
  long sign = 1;
  for (std::size_t j = 1; j < d; ++j) {
    Element c = detail::linear_form(r, j);
    if (c < z) {
      z = std::move(c);
      t = detail::prefix_product(r, j);
    }
  }

  // Y = s R^-1 s^-1 with s the closing separator of R.
  detail::CyclicForm y;
  y.level = r.level;
  for (std::size_t i = d; i-- > 0;) y.factors.push_back({r.factors[i].root, -r.factors[i].exponent});
  for (std::size_t i = d - 1; i-- > 0;) y.separators.push_back(invert(r.separators[i]));
  y.separators.push_back(invert(r.separators[d - 1]));
  Element shift = detail::gauge_fix(y);
  Element lead = invert(multiply(shift, r.separators[d - 1]));
  for (std::size_t j = 0; j < d; ++j) {
    Element c = detail::linear_form(y, j);
    if (c < z) {
      z = std::move(c);
      t = multiply(lead, detail::prefix_product(y, j));
      sign = -1;
    }
  }
  return {multiply(invert(t), core.conjugator), RootElement{z}, RingElement(sign * k)};
}

}  // namespace

RootDecomposition extract_root(const Element& g) {
  if (g.is_identity()) throw IdentityInputError("root of the identity");
  detail::Core core = detail::cyclic_core(g);
  switch (core.kind) {
    case detail::Core::Kind::Free: {
      WordRoot wr = free_primitive_root(core.word);
      CanonicalRotation rot = canonical_rotation(wr.root, true);
      long sign = rot.inverted ? -1 : 1;
      return {multiply(Element::from_word(rot.prefix.inverse()), core.conjugator),
              RootElement{Element::from_word(rot.word)}, RingElement(sign * wr.exponent)};
    }
    case detail::Core::Kind::Elliptic:
      return {core.conjugator, core.power.root, core.power.exponent};
    case detail::Core::Kind::Hyperbolic:
      return hyperbolic_root(core);
  }
  return {};
}

Element power(const Element& g, const RingElement& alpha) {
  if (g.is_identity()) return g;
  if (alpha.is_integer()) return integer_power(g, detail::to_int64(alpha.constant_term()));
  RootDecomposition r = extract_root(g);
  RingElement e = r.exponent * alpha;
  Element body = e.is_integer() ? detail::root_power(r.root.body, detail::to_int64(e.constant_term()))
                                : factor_element(r.root, e);
  return multiply(multiply(invert(r.conjugator), body), r.conjugator);
}

bool equals(const Element& g, const Element& h) { return g == h; }

bool equals_by_identity(const Element& g, const Element& h) {
  return multiply(g, invert(h)).is_identity();
}

bool equals_by_matching(const Element& g, const Element& h) {
  if (g.level() != h.level()) return false;
  if (g.level() == 0) return g.word() == h.word();
  std::size_t m = g.factor_count();
  if (h.factor_count() != m) return false;
  auto u = g.separators();
  auto w = h.separators();
  auto a = g.factors();
  auto b = h.factors();
  for (std::size_t i = 0; i < m; ++i)
    if (!(a[i].root == b[i].root)) return false;
  // w_{m+1} = v_m^{-l_m} u_{m+1}; w_i = v_{i-1}^{-l_{i-1}} u_i v_i^{k_i};
  // w_1 = u_1 v_1^{k_1}; b_i = a_i - k_i + l_i.
  auto l = detail::power_membership(multiply(u[m], invert(w[m])), a[m - 1].root.body);
  if (!l) return false;
  for (std::size_t i = m; i-- > 0;) {
    RingElement diff = a[i].exponent - b[i].exponent + RingElement(static_cast<long>(*l));
    if (!diff.is_integer()) return false;
    Element shifted =
        multiply(u[i], detail::root_power(a[i].root.body, detail::to_int64(diff.constant_term())));
    if (i == 0) return equals_by_matching(shifted, w[0]);
    l = detail::power_membership(multiply(shifted, invert(w[i])), a[i - 1].root.body);
    if (!l) return false;
  }
  return false;
}

Element commutator(const Element& g, const Element& h) {
  return multiply(multiply(invert(g), invert(h)), multiply(g, h));
}

Element conjugate(const Element& g, const Element& w) {
  return multiply(multiply(invert(w), g), w);
}

bool in_root_module(const Element& x, const RootElement& root) {
  if (x.is_identity()) return true;
  if (x.level() == root.level()) return detail::power_membership(x, root.body).has_value();
  return x.level() == root.level() + 1 && x.factor_count() == 1 &&
         x.separators()[0].is_identity() && x.separators()[1].is_identity() &&
         x.factors()[0].root == root;
}

bool commutes(const Element& g, const Element& h) {
  if (g.is_identity() || h.is_identity()) return true;
  RootDecomposition rg = extract_root(g);
  RootDecomposition rh = extract_root(h);
  if (!(rg.root == rh.root)) return false;
  return in_root_module(multiply(rg.conjugator, invert(rh.conjugator)), rg.root);
}

bool commutes_by_commutator(const Element& g, const Element& h) {
  return commutator(g, h).is_identity();
}

CentralizerHandle centralizer(const Element& g) {
  if (g.is_identity()) throw IdentityInputError("centralizer of the identity");
  RootDecomposition r = extract_root(g);
  return {r.conjugator, r.root};
}

bool CentralizerHandle::contains(const Element& h) const {
  return in_root_module(multiply(multiply(conjugator, h), invert(conjugator)), root);
}

CoreDecomposition cyclic_reduce(const Element& g) {
  if (g.is_identity()) return {};
  detail::Core core = detail::cyclic_core(g);
  return {core.conjugator, core.element()};
}

CoreDecomposition conjugacy_representative(const Element& g) {
  detail::ClassRep r = detail::class_representative(g);
  return {r.conjugator, r.rep};
}

std::optional<Element> conjugate_test(const Element& g, const Element& h) {
  detail::ClassRep rg = detail::class_representative(g);
  detail::ClassRep rh = detail::class_representative(h);
  if (!(rg.rep == rh.rep)) return std::nullopt;
  return multiply(invert(rg.conjugator), rh.conjugator);
}

Word evaluate_hom(const Element& g, const BigInt& k) {
  if (g.level() == 0) return g.word();
  Word acc;
  for (std::size_t i = 0; i < g.factor_count(); ++i) {
    acc = acc * evaluate_hom(g.separators()[i], k);
    const PowerFactor& p = g.factors()[i];
    acc = acc * power(evaluate_hom(p.root.body, k), detail::to_int64(p.exponent.evaluate_at(k)));
  }
  return acc * evaluate_hom(g.separators().back(), k);
}

}  // namespace fxg

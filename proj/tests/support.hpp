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

#include <initializer_list>
#include <string>
#include <string_view>

#include "fxg/element.hpp"
#include "fxg/errors.hpp"
#include "fxg/group_ops.hpp"
#include "fxg/oracle.hpp"
#include "fxg/ring.hpp"
#include "fxg/session.hpp"
#include "fxg/word.hpp"

namespace fxg::test {

inline const Context& ctx() {
  static const Context c{Alphabet::parse("a,b"), make_ring("zt")};
  return c;
}

inline Element E(std::string_view text) { return normalize(parse_expression(text, ctx())); }
inline std::string F(const Element& g) { return format(g, ctx().alphabet); }
inline std::string F(const Word& w) { return ctx().alphabet.format(w); }
inline RingElement P(std::string_view text) { return parse_polynomial(text); }
inline Word W(std::string_view text) {
  Element g = E(text);
  return g.word();
}

/// Images under t := k agree at every sample point; a necessary condition
/// for equality that does not touch normal forms.
inline bool same_images(const Element& g, const Element& h,
                        std::initializer_list<long> points = {-3, -2, -1, 0, 1, 2, 3, 4}) {
  for (long k : points)
    if (evaluate_hom(g, BigInt(k)) != evaluate_hom(h, BigInt(k))) return false;
  return true;
}

/// Image of an unnormalized tree under t := k, computed directly on words.
inline Word raw_image(const RawExpr& e, long k) {
  switch (e.kind()) {
    case RawExpr::Kind::Identity:
      return Word();
    case RawExpr::Kind::Gen:
      return Word::generator(e.generator(), e.sign());
    case RawExpr::Kind::Product: {
      Word out;
      for (const auto& c : e.children()) out = out * raw_image(c, k);
      return out;
    }
    case RawExpr::Kind::Inverse:
      return raw_image(e.child(), k).inverse();
    case RawExpr::Kind::Power: {
      BigInt n = e.exponent().evaluate_at(BigInt(k));
      return power(raw_image(e.child(), k), n.get_si());
    }
  }
  return Word();
}

/// Reassembles c^-1 * body * c.
inline Element conj_back(const Element& c, const Element& body) {
  return multiply(multiply(invert(c), body), c);
}

inline GenParams params(std::uint32_t max_level = 2) {
  GenParams p;
  p.max_level = max_level;
  return p;
}

inline Element random_at(Rng& rng, std::uint32_t level, const GenParams& p = params()) {
  return normalize(random_expression(rng, p, level));
}

inline Element random_upto(Rng& rng, std::uint32_t max_level, const GenParams& p = params()) {
  return random_at(rng, static_cast<std::uint32_t>(rng.uniform(0, max_level)), p);
}

}  // namespace fxg::test

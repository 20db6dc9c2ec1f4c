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

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "detail.hpp"
#include "fxg/errors.hpp"

namespace fxg {

namespace detail {

std::int64_t to_int64(const BigInt& value) {
  if (!value.fits_slong_p()) throw std::overflow_error("integer exponent out of range");
  return value.get_si();
}

Parts lift(const Element& g, std::uint32_t level) {
  Parts p;
  p.level = level;
  if (level > 0 && g.level() == level) {
    p.separators.assign(g.separators().begin(), g.separators().end());
    p.factors.assign(g.factors().begin(), g.factors().end());
  } else {
    p.separators.push_back(g);
  }
  return p;
}

Element finish(Parts parts) {
  if (parts.factors.empty()) return parts.separators.front();
  return Element::assemble(parts.level, std::move(parts.separators), std::move(parts.factors));
}

std::size_t size_at(const Element& x, std::uint32_t level) {
  if (level == 0) return static_cast<std::size_t>(x.word().length());
  return x.level() == level ? x.factor_count() : 0;
}

std::size_t translation_length(const Element& root) {
  if (root.level() == 0) return static_cast<std::size_t>(root.word().length());
  return root.factor_count();
}

namespace {

constexpr std::size_t kNoDirty = std::numeric_limits<std::size_t>::max();
constexpr int kSearchLimit = 1 << 20;

Element factor_element(const PowerFactor& p) {
  return Element::assemble(p.root.level() + 1, {Element(), Element()}, {p});
}

// Merges across the junction at separator `j` until no merge applies.
// Returns the separator left unsettled, or kNoDirty.
std::size_t settle(Parts& p, std::size_t j) {
  while (j > 0 && j < p.factors.size()) {
    if (!(p.factors[j - 1].root == p.factors[j].root)) break;
    Element v = p.factors[j - 1].root.body;
    auto n = power_membership(p.separators[j], v);
    if (!n) break;
    RingElement e = p.factors[j - 1].exponent + p.factors[j].exponent + RingElement(static_cast<long>(*n));
    if (!e.is_integer()) {
      p.factors[j - 1].exponent = std::move(e);
      p.factors.erase(p.factors.begin() + static_cast<std::ptrdiff_t>(j));
      p.separators.erase(p.separators.begin() + static_cast<std::ptrdiff_t>(j));
      return kNoDirty;
    }
    Element merged = multiply(multiply(p.separators[j - 1], root_power(v, to_int64(e.constant_term()))),
                              p.separators[j + 1]);
    auto fj = p.factors.begin() + static_cast<std::ptrdiff_t>(j);
    p.factors.erase(fj - 1, fj + 1);
    p.separators[j - 1] = std::move(merged);
    auto sj = p.separators.begin() + static_cast<std::ptrdiff_t>(j);
    p.separators.erase(sj, sj + 2);
    --j;
  }
  return j;
}

std::size_t join(Parts& out, const Element& g, const Element& h) {
  std::uint32_t level = std::max(g.level(), h.level());
  Parts a = lift(g, level);
  Parts b = lift(h, level);
  std::size_t j = a.factors.size();
  out.level = level;
  out.factors = std::move(a.factors);
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  out.separators.assign(a.separators.begin(), a.separators.end() - 1);
  out.separators.push_back(multiply(a.separators.back(), b.separators.front()));
  out.separators.insert(out.separators.end(), b.separators.begin() + 1, b.separators.end());
  return settle(out, j);
}

Parts inverted_parts(const Element& g) {
  Parts p;
  p.level = g.level();
  for (auto it = g.separators().rbegin(); it != g.separators().rend(); ++it)
    p.separators.push_back(invert(*it));
  for (auto it = g.factors().rbegin(); it != g.factors().rend(); ++it)
    p.factors.push_back({it->root, -it->exponent});
  return p;
}

// ---- coset search -------------------------------------------------------

struct Probe {
  std::int64_t k = 0;
  Element value;
  std::size_t size = 0;
};

using Step = std::function<Element(const Element&, int)>;

// All minimisers of k -> size(step^k applied to the start value); the size
// is convex in k, so a descent followed by plateau extension is exhaustive.
std::vector<Probe> descend(const Element& start, std::int64_t k0, const Step& step,
                           std::uint32_t level) {
  auto make = [&](std::int64_t k, Element v) {
    std::size_t s = size_at(v, level);
    return Probe{k, std::move(v), s};
  };
  int budget = kSearchLimit;
  auto tick = [&budget] {
    if (--budget < 0) throw std::logic_error("coset search did not terminate");
  };
  std::vector<Probe> out;
  Probe cur = make(k0, start);
  Probe up = make(k0 + 1, step(cur.value, 1));
  Probe down;
  bool have_down = false;
  int dir = 0;
  if (up.size < cur.size) {
    dir = 1;
  } else {
    down = make(k0 - 1, step(cur.value, -1));
    have_down = true;
    if (down.size < cur.size) dir = -1;
  }
  if (dir != 0) {
    cur = dir > 0 ? std::move(up) : std::move(down);
    for (;;) {
      tick();
      Probe next = make(cur.k + dir, step(cur.value, dir));
      if (next.size < cur.size) {
        cur = std::move(next);
        continue;
      }
      out.push_back(cur);
      while (next.size == cur.size) {
        tick();
        Probe after = make(next.k + dir, step(next.value, dir));
        out.push_back(std::move(next));
        next = std::move(after);
      }
      return out;
    }
  }
  out.push_back(cur);
  for (Probe p = std::move(up); p.size == cur.size;) {
    tick();
    Probe after = make(p.k + 1, step(p.value, 1));
    out.push_back(std::move(p));
    p = std::move(after);
  }
  if (!have_down) down = make(k0 - 1, step(cur.value, -1));
  for (Probe p = std::move(down); p.size == cur.size;) {
    tick();
    Probe after = make(p.k - 1, step(p.value, -1));
    out.push_back(std::move(p));
    p = std::move(after);
  }
  return out;
}

struct CacheKey {
  Element left, x, right;
  bool has_left, has_right;
  std::uint32_t level;
  bool operator==(const CacheKey& o) const {
    return has_left == o.has_left && has_right == o.has_right && level == o.level &&
           x == o.x && left == o.left && right == o.right;
  }
};

struct CacheKeyHash {
  std::size_t operator()(const CacheKey& k) const noexcept {
    std::size_t h = k.x.hash();
    h = h * 31 + (k.has_left ? k.left.hash() : 7);
    h = h * 31 + (k.has_right ? k.right.hash() : 11);
    return h * 31 + k.level;
  }
};

constexpr std::size_t kCacheLimit = 1 << 18;

std::unordered_map<CacheKey, Coset, CacheKeyHash>& coset_cache() {
  thread_local std::unordered_map<CacheKey, Coset, CacheKeyHash> cache;
  return cache;
}

Coset search(const Element* left, const Element& x, const Element* right, std::uint32_t level) {
  Element left_inv = left ? reduced_invert(*left) : Element();
  Element right_inv = right ? reduced_invert(*right) : Element();
  Step lstep = [&](const Element& y, int dir) {
    return reduced_multiply(dir > 0 ? *left : left_inv, y);
  };
  Step rstep = [&](const Element& y, int dir) {
    return reduced_multiply(y, dir > 0 ? *right : right_inv);
  };

  struct Candidate {
    std::int64_t alpha, beta;
    Element value;
  };
  std::vector<Candidate> cands;

  if (!right) {
    for (auto& p : descend(x, 0, lstep, level)) cands.push_back({p.k, 0, std::move(p.value)});
  } else if (!left) {
    for (auto& p : descend(x, 0, rstep, level)) cands.push_back({0, p.k, std::move(p.value)});
  } else {
    std::map<std::int64_t, Element> rpow{{0, Element()}};
    auto right_power = [&](std::int64_t k) {
      auto it = rpow.lower_bound(k);
      if (it != rpow.end() && it->first == k) return it->second;
      // Extend from the nearest cached power towards k.
      std::int64_t from = k > 0 ? std::prev(it)->first : it->first;
      Element acc = rpow[from];
      int dir = k > from ? 1 : -1;
      for (std::int64_t i = from; i != k;) {
        i += dir;
        acc = reduced_multiply(acc, dir > 0 ? *right : right_inv);
        rpow.emplace(i, acc);
      }
      return acc;
    };
    std::size_t slack = translation_length(*right);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::int64_t warm = 0;
    auto eval = [&](std::int64_t alpha, const Element& y) {
      Element start = warm == 0 ? y : reduced_multiply(y, right_power(warm));
      auto found = descend(start, warm, rstep, level);
      std::size_t h = found.front().size;
      warm = found.front().k;
      if (h < best) {
        best = h;
        cands.clear();
      }
      if (h == best)
        for (auto& p : found) cands.push_back({alpha, p.k, std::move(p.value)});
      return h;
    };
    Probe a0 = descend(x, 0, lstep, level).front();
    eval(a0.k, a0.value);
    std::int64_t warm0 = warm;
    for (int dir : {1, -1}) {
      warm = warm0;
      Element y = a0.value;
      for (std::int64_t a = a0.k + dir;; a += dir) {
        if (std::llabs(a - a0.k) > kSearchLimit) throw std::logic_error("coset search did not terminate");
        y = lstep(y, dir);
        if (eval(a, y) > best + slack) break;
      }
    }
  }

  const Candidate* pick = nullptr;
  Element pick_value;
  for (auto& c : cands) {
    Element canon = level == 0 ? c.value : canonicalize(c.value);
    if (!pick || canon < pick_value) {
      pick = &c;
      pick_value = std::move(canon);
    }
  }
  return {-pick->alpha, pick_value, -pick->beta};
}

}  // namespace

Coset dcrep(const Element* left, const Element& x, const Element* right, std::uint32_t level) {
  if ((!left && !right) || x.is_identity()) return {0, x, 0};
  if (left && right && *left == *right)
    if (auto k = power_membership(x, *left)) return {*k, Element(), 0};
  auto& cache = coset_cache();
  CacheKey key{left ? *left : Element(), x, right ? *right : Element(), left != nullptr,
               right != nullptr, level};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Coset result = search(left, x, right, level);
  if (cache.size() >= kCacheLimit) cache.clear();
  cache.emplace(std::move(key), result);
  return result;
}

void clear_caches() { coset_cache().clear(); }

void canonicalize_separator(Parts& p, std::size_t i) {
  if (p.factors.empty()) return;
  const Element* left = i > 0 ? &p.factors[i - 1].root.body : nullptr;
  const Element* right = i < p.factors.size() ? &p.factors[i].root.body : nullptr;
  Coset c = dcrep(left, p.separators[i], right, p.level - 1);
  p.separators[i] = std::move(c.rep);
  if (left && c.alpha) p.factors[i - 1].exponent += RingElement(static_cast<long>(c.alpha));
  if (right && c.beta) p.factors[i].exponent += RingElement(static_cast<long>(c.beta));
}

Element canonicalize(const Element& reduced) {
  if (reduced.level() == 0) return reduced;
  Parts p = lift(reduced, reduced.level());
  for (std::size_t i = 0; i < p.separators.size(); ++i) canonicalize_separator(p, i);
  return finish(std::move(p));
}

Element reduced_multiply(const Element& g, const Element& h) {
  if (g.is_identity()) return h;
  if (h.is_identity()) return g;
  if (g.level() == 0 && h.level() == 0) return Element::from_word(g.word() * h.word());
  Parts p;
  join(p, g, h);
  return finish(std::move(p));
}

Element reduced_invert(const Element& g) {
  if (g.level() == 0) return Element::from_word(g.word().inverse());
  return finish(inverted_parts(g));
}

std::optional<std::int64_t> power_membership(const Element& x, const Element& root) {
  if (x.is_identity()) return 0;
  if (root.level() == 0) {
    if (x.level() != 0) return std::nullopt;
    return free_power_membership(x.word(), root.word());
  }
  if (x.level() != root.level()) return std::nullopt;
  std::size_t r = root.factor_count();
  std::size_t m = x.factor_count();
  if (m % r != 0) return std::nullopt;
  auto k = static_cast<std::int64_t>(m / r);
  const auto& first = x.factors().front();
  if (first.root == root.factors().front().root && first.exponent == root.factors().front().exponent &&
      x == root_power(root, k))
    return k;
  if (first.root == root.factors().back().root && x == root_power(root, -k)) return -k;
  return std::nullopt;
}

Element root_power(const Element& root, std::int64_t k) {
  if (k == 0) return {};
  if (root.level() == 0) return Element::from_word(power(root.word(), k));
  if (k < 0) return invert(root_power(root, -k));
  if (k == 1) return root;
  std::vector<Element> seps{root.separators().front()};
  std::vector<PowerFactor> factors;
  for (std::int64_t i = 0; i < k; ++i) {
    seps.insert(seps.end(), root.separators().begin() + 1, root.separators().end());
    factors.insert(factors.end(), root.factors().begin(), root.factors().end());
  }
  return Element::assemble(root.level(), std::move(seps), std::move(factors));
}

// ---- cyclic forms ---------------------------------------------------------

Element linear_form(const CyclicForm& form, std::size_t start) {
  std::size_t m = form.size();
  std::vector<Element> seps{Element()};
  std::vector<PowerFactor> factors;
  for (std::size_t j = 0; j < m; ++j) {
    std::size_t idx = (start + j) % m;
    factors.push_back(form.factors[idx]);
    seps.push_back(form.separators[idx]);
  }
  return Element::assemble(form.level, std::move(seps), std::move(factors));
}

Element prefix_product(const CyclicForm& form, std::size_t count) {
  if (count == 0) return {};
  std::vector<Element> seps{Element()};
  std::vector<PowerFactor> factors;
  for (std::size_t j = 0; j < count; ++j) {
    factors.push_back(form.factors[j]);
    seps.push_back(form.separators[j]);
  }
  return Element::assemble(form.level, std::move(seps), std::move(factors));
}

CyclicForm rotated(const CyclicForm& form, std::size_t start) {
  CyclicForm out = form;
  std::rotate(out.factors.begin(), out.factors.begin() + static_cast<std::ptrdiff_t>(start),
              out.factors.end());
  std::rotate(out.separators.begin(), out.separators.begin() + static_cast<std::ptrdiff_t>(start),
              out.separators.end());
  return out;
}

Element gauge_fix(CyclicForm& form) {
  std::size_t m = form.size();
  std::int64_t wrap = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Element& l = form.factors[i].root.body;
    const Element& r = form.factors[(i + 1) % m].root.body;
    Coset c = dcrep(&l, form.separators[i], &r, form.level - 1);
    form.separators[i] = std::move(c.rep);
    form.factors[i].exponent += RingElement(static_cast<long>(c.alpha));
    if (i + 1 < m)
      form.factors[i + 1].exponent += RingElement(static_cast<long>(c.beta));
    else
      wrap = c.beta;
  }
  // The trailing shift is moved to the front by conjugation.
  form.factors[0].exponent += RingElement(static_cast<long>(wrap));
  return root_power(form.factors[0].root.body, wrap);
}

Element Core::element() const {
  switch (kind) {
    case Kind::Free:
      return Element::from_word(word);
    case Kind::Elliptic:
      return factor_element(power);
    case Kind::Hyperbolic:
      return linear_form(cyclic, 0);
  }
  return {};
}

Core cyclic_core(const Element& input) {
  Element conj;
  Element g = input;
  for (;;) {
    if (g.level() == 0) {
      auto red = free_cyclic_reduce(g.word());
      Core out;
      out.kind = Core::Kind::Free;
      out.word = std::move(red.core);
      out.conjugator = multiply(Element::from_word(red.conjugator), conj);
      return out;
    }
    const Element u1 = g.separators().front();
    conj = multiply(invert(u1), conj);
    CyclicForm f;
    f.level = g.level();
    f.factors.assign(g.factors().begin(), g.factors().end());
    f.separators.assign(g.separators().begin() + 1, g.separators().end() - 1);
    f.separators.push_back(multiply(g.separators().back(), u1));

    bool dropped = false;
    for (;;) {
      std::size_t m = f.size();
      if (!(f.factors.front().root == f.factors.back().root)) break;
      const Element v = f.factors.front().root.body;
      auto n = power_membership(f.separators.back(), v);
      if (!n) break;
      RingElement shift(static_cast<long>(*n));
      if (m == 1) {
        Core out;
        out.kind = Core::Kind::Elliptic;
        out.power = {f.factors.front().root, f.factors.front().exponent + shift};
        out.conjugator = conj;
        return out;
      }
      PowerFactor tail{f.factors.back().root, f.factors.back().exponent + shift};
      conj = multiply(factor_element(tail), conj);
      RingElement e = tail.exponent + f.factors.front().exponent;
      f.factors.pop_back();
      f.separators.pop_back();
      if (!e.is_integer()) {
        f.factors.front().exponent = std::move(e);
        continue;
      }
      Element head = multiply(root_power(v, to_int64(e.constant_term())), f.separators.front());
      if (m == 2) {
        g = head;
        dropped = true;
        break;
      }
      conj = multiply(invert(head), conj);
      f.factors.erase(f.factors.begin());
      f.separators.erase(f.separators.begin());
      f.separators.back() = multiply(f.separators.back(), head);
    }
    if (dropped) continue;
    Element c = gauge_fix(f);
    Core out;
    out.kind = Core::Kind::Hyperbolic;
    out.cyclic = std::move(f);
    out.conjugator = multiply(c, conj);
    return out;
  }
}

ClassRep class_representative(const Element& g) {
  if (g.is_identity()) return {};
  Core core = cyclic_core(g);
  switch (core.kind) {
    case Core::Kind::Free: {
      auto rot = canonical_rotation(core.word, false);
      return {Element::from_word(rot.word),
              multiply(Element::from_word(rot.prefix.inverse()), core.conjugator)};
    }
    case Core::Kind::Elliptic:
      return {core.element(), core.conjugator};
    case Core::Kind::Hyperbolic: {
      std::size_t best = 0;
      Element rep = linear_form(core.cyclic, 0);
      for (std::size_t j = 1; j < core.cyclic.size(); ++j) {
        Element candidate = linear_form(core.cyclic, j);
        if (candidate < rep) {
          rep = std::move(candidate);
          best = j;
        }
      }
      return {rep, multiply(invert(prefix_product(core.cyclic, best)), core.conjugator)};
    }
  }
  return {};
}

}  // namespace detail

Element multiply(const Element& g, const Element& h) {
  if (g.is_identity()) return h;
  if (h.is_identity()) return g;
  if (g.level() == 0 && h.level() == 0) return Element::from_word(g.word() * h.word());
  detail::Parts p;
  std::size_t dirty = detail::join(p, g, h);
  if (dirty != detail::kNoDirty) detail::canonicalize_separator(p, dirty);
  return detail::finish(std::move(p));
}

Element invert(const Element& g) {
  if (g.level() == 0) return Element::from_word(g.word().inverse());
  detail::Parts p = detail::inverted_parts(g);
  for (std::size_t i = 0; i < p.separators.size(); ++i) detail::canonicalize_separator(p, i);
  return detail::finish(std::move(p));
}

Element integer_power(const Element& g, std::int64_t n) {
  if (n == 0 || g.is_identity()) return {};
  if (g.level() == 0) return Element::from_word(power(g.word(), n));
  Element base = n < 0 ? invert(g) : g;
  std::uint64_t k = n < 0 ? -static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
  Element acc;
  while (k) {
    if (k & 1) acc = multiply(acc, base);
    k >>= 1;
    if (k) base = multiply(base, base);
  }
  return acc;
}

bool audit_normal_form(const Element& g) {
  if (g.level() == 0) return true;
  std::uint32_t level = g.level();
  auto seps = g.separators();
  auto factors = g.factors();
  if (factors.empty() || seps.size() != factors.size() + 1) return false;
  for (const auto& s : seps)
    if (s.level() >= level || !audit_normal_form(s)) return false;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].root.level() + 1 != level) return false;
    if (factors[i].exponent.is_integer()) return false;
    if (i > 0 && factors[i - 1].root == factors[i].root &&
        detail::power_membership(seps[i], factors[i].root.body))
      return false;
  }
  detail::Parts p = detail::lift(g, level);
  for (std::size_t i = 0; i < p.separators.size(); ++i) {
    detail::canonicalize_separator(p, i);
    if (!(p.separators[i] == seps[i])) return false;
  }
  return true;
}

}  // namespace fxg

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

#include "fxg/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "fxg/errors.hpp"

namespace fxg {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("word exponent overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("word exponent overflow");
  return r;
}

int sign_of(std::int64_t x) { return x > 0 ? 1 : -1; }

}  // namespace

Word::Word(std::span<const Syllable> syllables) {
  syl_.reserve(syllables.size());
  for (const auto& s : syllables) push(s);
}

Word Word::generator(std::uint32_t gen, std::int64_t exp) {
  Word w;
  w.push({gen, exp});
  return w;
}

void Word::push(Syllable s) {
  if (s.exp == 0) return;
  if (!syl_.empty() && syl_.back().gen == s.gen) {
    syl_.back().exp = checked_add(syl_.back().exp, s.exp);
    if (syl_.back().exp == 0) syl_.pop_back();
    return;
  }
  syl_.push_back(s);
}

std::int64_t Word::length() const noexcept {
  std::int64_t n = 0;
  for (const auto& s : syl_) n += std::llabs(s.exp);
  return n;
}

std::size_t Word::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& s : syl_) {
    h = (h ^ s.gen) * 0x100000001b3ULL;
    h = (h ^ static_cast<std::size_t>(s.exp)) * 0x100000001b3ULL;
  }
  return h;
}

Word Word::inverse() const {
  Word r;
  r.syl_.reserve(syl_.size());
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) r.syl_.push_back({it->gen, -it->exp});
  return r;
}

Word Word::slice(std::int64_t from, std::int64_t count) const {
  Word r;
  std::int64_t pos = 0;
  for (const auto& s : syl_) {
    if (count <= 0) break;
    std::int64_t len = std::llabs(s.exp);
    if (pos + len <= from) {
      pos += len;
      continue;
    }
    std::int64_t skip = std::max<std::int64_t>(0, from - pos);
    std::int64_t take = std::min(len - skip, count);
    r.push({s.gen, sign_of(s.exp) * take});
    count -= take;
    pos += len;
  }
  return r;
}

Word Word::rotate(std::int64_t offset) const {
  std::int64_t n = length();
  if (n == 0) return *this;
  offset %= n;
  if (offset < 0) offset += n;
  return slice(offset, n - offset) * slice(0, offset);
}

Word operator*(const Word& u, const Word& w) {
  Word r = u;
  r.syl_.reserve(u.syl_.size() + w.syl_.size());
  for (const auto& s : w.syl_) r.push(s);
  return r;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  std::size_t n = std::min(a.syl_.size(), b.syl_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = a.syl_[i];
    const auto& y = b.syl_[i];
    if (auto c = x.gen <=> y.gen; c != 0) return c;
    // Positive exponents sort before negative ones.
    if (auto c = (x.exp < 0) <=> (y.exp < 0); c != 0) return c;
    if (auto c = std::llabs(x.exp) <=> std::llabs(y.exp); c != 0) return c;
  }
  return a.syl_.size() <=> b.syl_.size();
}

Word power(const Word& w, std::int64_t n) {
  if (n == 0 || w.empty()) return {};
  if (n < 0) return power(w.inverse(), -n);
  auto [conj, core] = free_cyclic_reduce(w);
  Word body;
  if (core.syllable_count() == 1) {
    auto s = core.syllables()[0];
    body = Word::generator(s.gen, checked_mul(s.exp, n));
  } else {
    // core is cyclically reduced, so repeated concatenation only merges at
    // equal-generator junctions and never cancels.
    Word acc;
    Word base = core;
    std::int64_t k = n;
    while (k > 0) {
      if (k & 1) acc = acc * base;
      k >>= 1;
      if (k) base = base * base;
    }
    body = std::move(acc);
  }
  return conj.inverse() * body * conj;
}

CyclicReduction free_cyclic_reduce(const Word& w) {
  std::vector<Syllable> s(w.syllables().begin(), w.syllables().end());
  Word prefix;
  std::ptrdiff_t lo = 0;
  std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(s.size()) - 1;
  while (lo < hi && s[lo].gen == s[hi].gen && sign_of(s[lo].exp) != sign_of(s[hi].exp)) {
    std::int64_t k = std::min(std::llabs(s[lo].exp), std::llabs(s[hi].exp));
    prefix = prefix * Word::generator(s[lo].gen, sign_of(s[lo].exp) * k);
    s[lo].exp -= sign_of(s[lo].exp) * k;
    s[hi].exp -= sign_of(s[hi].exp) * k;
    if (s[lo].exp == 0) ++lo;
    if (s[hi].exp == 0) --hi;
  }
  Word core;
  if (lo <= hi) core = Word(std::span<const Syllable>(s.data() + lo, hi - lo + 1));
  return {prefix.inverse(), core};
}

WordRoot free_primitive_root(const Word& w) {
  if (w.empty()) throw IdentityInputError("primitive root of the identity");
  auto [conj, core] = free_cyclic_reduce(w);
  if (core.syllable_count() == 1) {
    auto s = core.syllables()[0];
    Word root = conj.inverse() * Word::generator(s.gen, sign_of(s.exp)) * conj;
    return {root, std::llabs(s.exp)};
  }
  std::int64_t n = core.length();
  for (std::int64_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    Word y = core.slice(0, d);
    if (power(y, n / d) == core) return {conj.inverse() * y * conj, n / d};
  }
  return {w, 1};
}

std::optional<std::int64_t> free_power_membership(const Word& u, const Word& v) {
  if (v.empty()) throw IdentityInputError("power membership in the trivial subgroup");
  if (u.empty()) return 0;
  auto [conj, core] = free_cyclic_reduce(v);
  std::int64_t body = u.length() - 2 * conj.length();
  std::int64_t step = core.length();
  if (body <= 0 || body % step != 0) return std::nullopt;
  std::int64_t k = body / step;
  if (power(v, k) == u) return k;
  if (power(v, -k) == u) return -k;
  return std::nullopt;
}

CanonicalRotation canonical_rotation(const Word& w, bool allow_inverse) {
  if (w.empty()) return {w, {}, false};
  auto syl = w.syllables();
  if (syl.size() == 1) {
    bool inv = allow_inverse && syl[0].exp < 0;
    return {inv ? w.inverse() : w, {}, inv};
  }
  Word base = w;
  Word lead;  // base = lead^-1 * w * lead
  if (syl.front().gen == syl.back().gen) {
    std::int64_t cut = w.length() - std::llabs(syl.back().exp);
    lead = w.slice(0, cut);
    base = w.rotate(cut);
  }
  CanonicalRotation best{base, lead, false};
  auto consider = [&](const Word& candidate_base, bool inverted) {
    std::int64_t offset = 0;
    for (const auto& s : candidate_base.syllables()) {
      Word rotated = candidate_base.rotate(offset);
      if (rotated < best.word) best = {rotated, lead * candidate_base.slice(0, offset), inverted};
      offset += std::llabs(s.exp);
    }
  };
  consider(base, false);
  if (allow_inverse) consider(base.inverse(), true);
  return best;
}

std::optional<Word> free_conjugacy(const Word& u, const Word& w) {
  auto ru = free_cyclic_reduce(u);
  auto rw = free_cyclic_reduce(w);
  if (ru.core.length() != rw.core.length()) return std::nullopt;
  auto cu = canonical_rotation(ru.core, false);
  auto cw = canonical_rotation(rw.core, false);
  if (cu.word != cw.word) return std::nullopt;
  // cu.word = Pu^-1 U Pu = Pw^-1 W Pw, so W = Q^-1 U Q with Q = Pu Pw^-1.
  Word q = cu.prefix * cw.prefix.inverse();
  Word c = ru.conjugator.inverse() * q * rw.conjugator;
  if (u.empty()) return Word();
  // Every conjugator is r^k c for the root r of u. |r^k c| is convex in k;
  // return the least one.
  Word r = free_primitive_root(u).root;
  std::int64_t step = free_cyclic_reduce(r).core.length();
  std::int64_t span = c.length() / step + 2;
  auto at = [&](std::int64_t k) { return power(r, k) * c; };
  std::int64_t lo = -span, hi = span;
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (at(mid + 1).length() >= at(mid).length()) hi = mid; else lo = mid + 1;
  }
  Word best = at(lo);
  for (std::int64_t k = lo + 1;; ++k) {
    Word x = at(k);
    if (x.length() != best.length()) break;
    if (x < best) best = x;
  }
  return best;
}

bool is_valid_identifier(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
    return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_valid_identifier(n)) throw Error("invalid generator name '" + n + "'");
    if (n == "t") throw Error("generator name 't' is reserved for the ring indeterminate");
    if (!seen.insert(n).second) throw Error("duplicate generator name '" + n + "'");
  }
  if (names_.empty()) throw Error("alphabet must declare at least one generator");
}

Alphabet Alphabet::parse(std::string_view list) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string item(list.substr(start, end - start));
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    names.push_back(item);
    start = end + 1;
  }
  return Alphabet(std::move(names));
}

std::optional<std::uint32_t> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

void Alphabet::check(const Word& w) const {
  for (const auto& s : w.syllables())
    if (s.gen >= names_.size())
      throw AlphabetMismatchError("generator index " + std::to_string(s.gen) +
                                  " outside an alphabet of size " + std::to_string(names_.size()));
}

Word Alphabet::multiply(const Word& u, const Word& w) const {
  check(u);
  check(w);
  return u * w;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += '*';
    out += name(s.gen);
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

}  // namespace fxg

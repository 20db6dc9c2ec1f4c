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

#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace fxg;
using fxg::test::F;

namespace {

Word a(std::int64_t e = 1) { return Word::generator(0, e); }
Word b(std::int64_t e = 1) { return Word::generator(1, e); }

// Letter-by-letter expansion; the reference representation for oracles.
std::vector<int> letters(const Word& w) {
  std::vector<int> out;
  for (auto s : w.syllables())
    for (std::int64_t i = 0; i < (s.exp < 0 ? -s.exp : s.exp); ++i)
      out.push_back(s.exp > 0 ? static_cast<int>(s.gen) + 1 : -static_cast<int>(s.gen) - 1);
  return out;
}

Word from_letters(const std::vector<int>& ls) {
  std::vector<Syllable> syl;
  for (int l : ls) syl.push_back({static_cast<std::uint32_t>((l > 0 ? l : -l) - 1), l > 0 ? 1 : -1});
  return Word(syl);
}

Word random_word(Rng& rng, int max_len, std::uint32_t gens = 3) {
  std::vector<Syllable> syl;
  auto n = rng.uniform(0, max_len);
  for (long i = 0; i < n; ++i) {
    auto e = rng.uniform(-3, 3);
    if (e == 0) e = 1;
    syl.push_back({static_cast<std::uint32_t>(rng.below(gens)), e});
  }
  return Word(syl);
}

}  // namespace

TEST_CASE("free multiplication examples") {
  CHECK(a() * b() * (b(-1) * a()) == a(2));
  Word w = a(2) * b(-1) * a();
  CHECK(w * Word() == w);
  CHECK(Word() * w == w);
  CHECK((a() * a(-1)).empty());
  CHECK(F(a() * b() * (b(-1) * a())) == "a^2");
}

TEST_CASE("alphabet mismatch is reported") {
  Alphabet ab = Alphabet::parse("a,b");
  CHECK_THROWS_AS(ab.multiply(a(), Word::generator(2)), AlphabetMismatchError);
  CHECK(ab.multiply(a(), b()) == a() * b());
}

TEST_CASE("free reduction happens on construction") {
  std::vector<Syllable> syl{{0, 2}, {1, 1}, {1, -1}, {0, -2}, {1, 3}};
  CHECK(Word(syl) == b(3));
  CHECK(Word(syl).length() == 3);
}

TEST_CASE("cyclic reduction examples") {
  auto r1 = free_cyclic_reduce(b(-1) * a() * b());
  CHECK(r1.conjugator == b());
  CHECK(r1.core == a());
  auto r2 = free_cyclic_reduce(a() * b());
  CHECK(r2.conjugator.empty());
  CHECK(r2.core == a() * b());
}

TEST_CASE("cyclic reduction agrees with the strip loop") {
  // Strip matching inverse letters from both ends until stable.
  auto strip = [](const Word& w) {
    std::vector<int> ls = letters(w);
    std::size_t lo = 0, hi = ls.size();
    while (hi - lo >= 2 && ls[lo] == -ls[hi - 1]) ++lo, --hi;
    std::vector<int> core(ls.begin() + lo, ls.begin() + hi);
    std::vector<int> conj(ls.begin() + hi, ls.end());
    return std::pair{from_letters(conj), from_letters(core)};
  };
  Word w = b(-1) * a(-1) * b() * a() * b();
  auto r = free_cyclic_reduce(w);
  auto [c, core] = strip(w);
  CHECK(r.conjugator == c);
  CHECK(r.core == core);
  CHECK(r.conjugator.inverse() * r.core * r.conjugator == w);

  Rng rng(21);
  for (int i = 0; i < 2000; ++i) {
    Word u = random_word(rng, 6), x = random_word(rng, 4);
    Word v = x.inverse() * u * x;
    auto got = free_cyclic_reduce(v);
    auto [c2, core2] = strip(v);
    CHECK(got.conjugator == c2);
    CHECK(got.core == core2);
  }
}

TEST_CASE("primitive root examples") {
  auto r1 = free_primitive_root(a(4));
  CHECK(r1.root == a());
  CHECK(r1.exponent == 4);
  auto r2 = free_primitive_root(power(a() * b(), 3));
  CHECK(r2.root == a() * b());
  CHECK(r2.exponent == 3);
  auto r3 = free_primitive_root(a() * b());
  CHECK(r3.root == a() * b());
  CHECK(r3.exponent == 1);
  CHECK_THROWS_AS(free_primitive_root(Word()), IdentityInputError);
}

TEST_CASE("power membership examples") {
  CHECK(free_power_membership(a(3), a()) == 3);
  CHECK_FALSE(free_power_membership(a() * b(), a()).has_value());
  CHECK(free_power_membership(Word(), a() * b()) == 0);
  CHECK(free_power_membership(power(a() * b(), -2), a() * b()) == -2);
  Word v = b(-1) * a() * b(2);
  CHECK(free_power_membership(power(v, 5), v) == 5);
  CHECK(free_power_membership(power(v, -3), v) == -3);
  CHECK_FALSE(free_power_membership(power(v, 2), power(v, 3)).has_value());
}

TEST_CASE("conjugacy examples") {
  auto c = free_conjugacy(a() * b(), b() * a());
  REQUIRE(c.has_value());
  CHECK(*c == a());
  CHECK_FALSE(free_conjugacy(a(), b()).has_value());
  Word w = a(2) * b(-1);
  auto self = free_conjugacy(w, w);
  REQUIRE(self.has_value());
  CHECK(self->empty());
  CHECK_FALSE(free_conjugacy(a() * b(), a() * b(-1)).has_value());
  CHECK_FALSE(free_conjugacy(Word(), a()).has_value());
}

TEST_CASE("inverses cancel") {
  Rng rng(22);
  for (int i = 0; i < 10000; ++i) {
    Word w = random_word(rng, 8);
    CHECK((w * w.inverse()).empty());
    CHECK((w.inverse() * w).empty());
    CHECK(w.inverse().inverse() == w);
  }
}

TEST_CASE("multiplication is associative") {
  Rng rng(23);
  for (int i = 0; i < 2000; ++i) {
    Word u = random_word(rng, 5, 2), v = random_word(rng, 5, 2), w = random_word(rng, 5, 2);
    CHECK((u * v) * w == u * (v * w));
  }
}

TEST_CASE("primitive root round trip") {
  Rng rng(24);
  for (int i = 0; i < 2000; ++i) {
    Word base = random_word(rng, 4, 2);
    if (base.empty()) continue;
    Word w = power(base, static_cast<std::int64_t>(rng.uniform(1, 5)));
    auto r = free_primitive_root(w);
    CHECK(power(r.root, r.exponent) == w);
    auto again = free_primitive_root(r.root);
    CHECK(again.root == r.root);
    CHECK(again.exponent == 1);
    CHECK(free_power_membership(base, r.root).has_value());
  }
}

TEST_CASE("random conjugates are found and verify") {
  Rng rng(25);
  for (int i = 0; i < 1000; ++i) {
    Word u = random_word(rng, 6), c = random_word(rng, 5);
    Word w = c.inverse() * u * c;
    auto got = free_conjugacy(u, w);
    REQUIRE(got.has_value());
    CHECK(got->inverse() * u * *got == w);
  }
}

TEST_CASE("canonical rotation matches exhaustive letter rotations") {
  // The representative must be the least letter-rotation (over w and w^-1)
  // among those whose ends carry different generators, and it never looks
  // at more than |core| candidates.
  Rng rng(26);
  for (int i = 0; i < 1000; ++i) {
    Word w = free_cyclic_reduce(random_word(rng, 6, 2)).core;
    if (w.empty()) continue;
    bool inv = rng.chance(1, 2);
    auto got = canonical_rotation(w, inv);
    CHECK(got.prefix.inverse() * (got.inverted ? w.inverse() : w) * got.prefix == got.word);

    std::set<std::vector<Syllable>> seen;
    std::optional<Word> best;
    std::size_t examined = 0;
    for (const Word& x : inv ? std::vector<Word>{w, w.inverse()} : std::vector<Word>{w}) {
      for (std::int64_t k = 0; k < x.length(); ++k) {
        Word r = x.rotate(k);
        ++examined;
        auto s = r.syllables();
        if (s.size() > 1 && s.front().gen == s.back().gen) continue;
        if (!best || r < *best) best = r;
      }
    }
    CHECK(examined <= 2 * static_cast<std::size_t>(w.length()));
    REQUIRE(best.has_value());
    CHECK(got.word == *best);
  }
}

TEST_CASE("word order is total") {
  Rng rng(27);
  for (int i = 0; i < 1000; ++i) {
    Word u = random_word(rng, 3, 2), v = random_word(rng, 3, 2);
    CHECK(((u <=> v) == 0) == (u == v));
    CHECK(((u <=> v) < 0) == ((v <=> u) > 0));
  }
  CHECK(a() < b());
  CHECK(a() < a(-1));
  CHECK(a(-1) < b());
}

TEST_CASE("large exponents stay run-length encoded") {
  Word w = a(1000000) * b() * a(-999999);
  CHECK(w.syllable_count() == 3);
  CHECK(w.length() == 2000000);
  auto r = free_cyclic_reduce(w);
  CHECK(r.core.length() == 2);
  CHECK_THROWS_AS(Word::generator(0, INT64_MAX) * a(), std::overflow_error);
}

TEST_CASE("alphabet parsing and formatting") {
  Alphabet x = Alphabet::parse("a, b,c");
  CHECK(x.size() == 3);
  CHECK(x.find("c") == 2u);
  CHECK_FALSE(x.find("t").has_value());
  CHECK(x.format(Word()) == "1");
  CHECK(x.format(a(2) * b(-1) * a()) == "a^2*b^-1*a");
  CHECK_THROWS_AS(Alphabet::parse("a,t"), Error);
  CHECK_THROWS_AS(Alphabet::parse("a,a"), Error);
  CHECK_THROWS_AS(Alphabet::parse("a,2x"), Error);
  CHECK(is_valid_identifier("x_1"));
  CHECK_FALSE(is_valid_identifier("1x"));
}

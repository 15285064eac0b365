#include "doctest.h"
#include "tensq/word.hpp"

using namespace tensq;

namespace {

// Deterministic LCG so property tests are reproducible.
struct Rng {
  std::uint64_t state = 0x243f6a8885a308d3ull;
  std::uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 11;
  }
  int range(int lo, int hi) { return lo + (int)(next() % (hi - lo + 1)); }
};

Word random_raw_word(Rng& rng, int gens, int len) {
  std::vector<Letter> raw;
  for (int i = 0; i < len; ++i) {
    int e = rng.range(-3, 3);
    if (e == 0) e = 1;
    raw.push_back(Letter{rng.range(0, gens - 1), e});
  }
  return Word::from_letters(raw);
}

}  // namespace

TEST_CASE("free reduction cancels inverse pairs") {
  Word w;
  w.append(0, 1);
  w.append(0, -1);
  CHECK(w.empty());

  Word u;
  u.append(0, 2);
  u.append(0, 3);
  CHECK(u.syllable_count() == 1);
  CHECK(u.syllables()[0].exp == 5);
}

TEST_CASE("cascading cancellation through nested inverses") {
  // a b b^-1 a  ->  a^2
  Word w;
  w.append(0, 1);
  w.append(1, 1);
  w.append(1, -1);
  w.append(0, 1);
  CHECK(w.syllable_count() == 1);
  CHECK(w.syllables()[0] == Letter{0, 2});

  Word v = w * inverse(w);
  CHECK(v.empty());
}

TEST_CASE("commutator expands with the fixed convention") {
  Word c = commutator(Word::single(0), Word::single(1));
  // a b a^-1 b^-1
  REQUIRE(c.syllable_count() == 4);
  CHECK(c.syllables()[0] == Letter{0, 1});
  CHECK(c.syllables()[1] == Letter{1, 1});
  CHECK(c.syllables()[2] == Letter{0, -1});
  CHECK(c.syllables()[3] == Letter{1, -1});
}

TEST_CASE("conjugation is x w x^-1") {
  Word c = conjugate(Word::single(0), Word::single(1));
  REQUIRE(c.syllable_count() == 3);
  CHECK(c.syllables()[0] == Letter{0, 1});
  CHECK(c.syllables()[1] == Letter{1, 1});
  CHECK(c.syllables()[2] == Letter{0, -1});
}

TEST_CASE("normalize_word is idempotent and length-nonincreasing") {
  Rng rng;
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_raw_word(rng, 4, rng.range(0, 12));
    Word n = normalize_word(w);
    CHECK(n == normalize_word(n));
    CHECK(n.letter_length() <= w.letter_length());
    CHECK((n * inverse(n)).empty());
  }
}

TEST_CASE("substitution maps generators to words") {
  std::vector<Word> images = {Word::single(0) * Word::single(1),
                              Word::single(0)};
  Word c = commutator(Word::single(0), Word::single(1));
  Word s = substituted(c, images);
  // xy x (xy)^-1 x^-1 = x y x y^-1 x^-2
  Word expect;
  expect.append(0, 1);
  expect.append(1, 1);
  expect.append(0, 1);
  expect.append(1, -1);
  expect.append(0, -2);
  CHECK(s == expect);
}

TEST_CASE("flatten expands exponents into column indices") {
  Word w;
  w.append(1, -2);
  w.append(0, 1);
  auto f = flatten(w);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == 3);
  CHECK(f[1] == 3);
  CHECK(f[2] == 0);
}

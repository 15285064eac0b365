#pragma once

#include <cstdint>
#include <cstdlib>
#include <span>
#include <vector>

namespace tensq {

// One syllable: generator index (0-based) with a nonzero exponent.
struct Letter {
  int gen = 0;
  int exp = 0;
  friend bool operator==(const Letter&, const Letter&) = default;
};

// A freely reduced word over generators 0..k-1.  Adjacent syllables never
// share a generator and no exponent is zero; the empty word is the identity.
// append() maintains the invariant, so words built through it are always in
// canonical form.
class Word {
 public:
  Word() = default;

  static Word from_letters(const std::vector<Letter>& raw);
  static Word single(int gen, int exp = 1);

  void append(int gen, int exp);
  void append(const Word& w);

  bool empty() const { return syllables_.empty(); }
  std::size_t syllable_count() const { return syllables_.size(); }
  const std::vector<Letter>& syllables() const { return syllables_; }

  // Total number of letters, i.e. the sum of |exponent| over syllables.
  std::uint64_t letter_length() const;

  // Net exponent sum of one generator (the abelianized image).
  long long exponent_sum(int gen) const;

  // Largest generator index used, or -1 for the empty word.
  int max_generator() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> syllables_;
};

// Free reduction of an arbitrary syllable sequence.  Idempotent and
// length-nonincreasing; words built via append() are already reduced.
Word normalize_word(const Word& w);

Word inverse(const Word& w);
Word operator*(const Word& a, const Word& b);
Word pow(const Word& w, int e);

// Left conjugation x w x^-1 (the convention used throughout: ^x w = x w x^-1).
Word conjugate(const Word& x, const Word& w);

// Commutator [a, b] = a b a^-1 b^-1.
Word commutator(const Word& a, const Word& b);

// Replace generator i by images[i] throughout.
Word substituted(const Word& w, std::span<const Word> images);

// Expansion into a flat letter list; entry 2g is generator g, 2g+1 its
// inverse.  This is the form the coset enumerator scans.
std::vector<int> flatten(const Word& w);

}  // namespace tensq

#include "tensq/word.hpp"

#include "tensq/errors.hpp"

namespace tensq {

Word Word::from_letters(const std::vector<Letter>& raw) {
  Word w;
  for (const Letter& l : raw) w.append(l.gen, l.exp);
  return w;
}

Word Word::single(int gen, int exp) {
  Word w;
  w.append(gen, exp);
  return w;
}

void Word::append(int gen, int exp) {
  if (gen < 0) throw BadParams("negative generator index in word");
  if (exp == 0) return;
  if (!syllables_.empty() && syllables_.back().gen == gen) {
    syllables_.back().exp += exp;
    if (syllables_.back().exp == 0) syllables_.pop_back();
    return;
  }
  syllables_.push_back(Letter{gen, exp});
}

void Word::append(const Word& w) {
  for (const Letter& l : w.syllables_) append(l.gen, l.exp);
}

std::uint64_t Word::letter_length() const {
  std::uint64_t n = 0;
  for (const Letter& l : syllables_) n += std::abs((long long)l.exp);
  return n;
}

long long Word::exponent_sum(int gen) const {
  long long s = 0;
  for (const Letter& l : syllables_)
    if (l.gen == gen) s += l.exp;
  return s;
}

int Word::max_generator() const {
  int m = -1;
  for (const Letter& l : syllables_)
    if (l.gen > m) m = l.gen;
  return m;
}

Word normalize_word(const Word& w) {
  return Word::from_letters(w.syllables());
}

Word inverse(const Word& w) {
  Word r;
  const auto& s = w.syllables();
  for (auto it = s.rbegin(); it != s.rend(); ++it) r.append(it->gen, -it->exp);
  return r;
}

Word operator*(const Word& a, const Word& b) {
  Word r = a;
  r.append(b);
  return r;
}

Word pow(const Word& w, int e) {
  Word r;
  if (e == 0) return r;
  Word base = e > 0 ? w : inverse(w);
  int n = std::abs(e);
  // Single syllables get the fast path: a^3 stays one syllable.
  if (base.syllable_count() == 1) {
    const Letter& l = base.syllables()[0];
    r.append(l.gen, l.exp * n);
    return r;
  }
  for (int i = 0; i < n; ++i) r.append(base);
  return r;
}

Word conjugate(const Word& x, const Word& w) {
  Word r = x;
  r.append(w);
  r.append(inverse(x));
  return r;
}

Word commutator(const Word& a, const Word& b) {
  Word r = a;
  r.append(b);
  r.append(inverse(a));
  r.append(inverse(b));
  return r;
}

Word substituted(const Word& w, std::span<const Word> images) {
  Word r;
  for (const Letter& l : w.syllables()) {
    if (l.gen >= (int)images.size())
      throw BadParams("substitution image missing for a generator");
    r.append(pow(images[l.gen], l.exp));
  }
  return r;
}

std::vector<int> flatten(const Word& w) {
  std::vector<int> out;
  out.reserve(w.letter_length());
  for (const Letter& l : w.syllables()) {
    int col = l.exp > 0 ? 2 * l.gen : 2 * l.gen + 1;
    long long n = std::abs((long long)l.exp);
    for (long long i = 0; i < n; ++i) out.push_back(col);
  }
  return out;
}

}  // namespace tensq

#include "tensq/presentation.hpp"

#include <algorithm>
#include <set>

#include "tensq/errors.hpp"

namespace tensq {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha((unsigned char)s[0])) return false;
  for (char c : s)
    if (!std::isalnum((unsigned char)c) && c != '_') return false;
  return true;
}

}  // namespace

Presentation::Presentation(std::string name,
                           std::vector<std::string> generator_names,
                           std::vector<Word> relators)
    : name_(std::move(name)), names_(std::move(generator_names)) {
  if (!valid_identifier(name_)) throw BadParams("bad presentation name");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_identifier(n)) throw BadParams("bad generator name: " + n);
    if (!seen.insert(n).second)
      throw BadParams("duplicate generator name: " + n);
  }
  relators_.reserve(relators.size());
  for (Word& w : relators) {
    Word r = normalize_word(w);
    if (r.max_generator() >= (int)names_.size())
      throw BadParams("relator uses undeclared generator index");
    if (!r.empty()) relators_.push_back(std::move(r));
  }
}

Presentation direct_product(const Presentation& p, const Presentation& q) {
  std::vector<std::string> names = p.generator_names();
  std::set<std::string> used(names.begin(), names.end());
  for (const std::string& n : q.generator_names()) {
    std::string candidate = n;
    int suffix = 1;
    while (used.count(candidate))
      candidate = n + "_" + std::to_string(suffix++);
    used.insert(candidate);
    names.push_back(candidate);
  }

  const int np = (int)p.generator_count();
  std::vector<Word> relators = p.relators();
  for (const Word& w : q.relators()) {
    Word shifted;
    for (const Letter& l : w.syllables()) shifted.append(l.gen + np, l.exp);
    relators.push_back(shifted);
  }
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < (int)q.generator_count(); ++j)
      relators.push_back(commutator(Word::single(i), Word::single(np + j)));

  return Presentation(p.name() + "x" + q.name(), std::move(names),
                      std::move(relators));
}

IntMatrix abelianized_relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators().size(), p.generator_count());
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    for (std::size_t j = 0; j < p.generator_count(); ++j)
      m.at(i, j) = (long)p.relators()[i].exponent_sum((int)j);
  return m;
}

namespace {

// Canonical representative of a relator up to cyclic rotation and
// inversion: the lexicographically least rotation of the flat letter list
// of w and of w^-1.
std::vector<int> relator_key(const Word& w) {
  std::vector<int> best;
  bool first = true;
  for (const Word& cand : {w, inverse(w)}) {
    std::vector<int> flat = flatten(cand);
    const std::size_t n = flat.size();
    if (n == 0) return {};
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<int> rot(n);
      for (std::size_t i = 0; i < n; ++i) rot[i] = flat[(i + r) % n];
      if (first || rot < best) {
        best = std::move(rot);
        first = false;
      }
    }
  }
  return best;
}

}  // namespace

bool presentations_match(const Presentation& p, const Presentation& q,
                         const std::vector<int>& gen_map) {
  if (gen_map.size() != p.generator_count()) return false;
  if (p.generator_count() != q.generator_count()) return false;

  std::vector<Word> images(p.generator_count());
  for (std::size_t i = 0; i < gen_map.size(); ++i) {
    int m = gen_map[i];
    if (m == 0) return false;
    int target = std::abs(m) - 1;
    if (target >= (int)q.generator_count()) return false;
    images[i] = Word::single(target, m > 0 ? 1 : -1);
  }

  std::multiset<std::vector<int>> lhs, rhs;
  for (const Word& r : p.relators())
    lhs.insert(relator_key(substituted(r, images)));
  for (const Word& r : q.relators()) rhs.insert(relator_key(r));
  return lhs == rhs;
}

}  // namespace tensq

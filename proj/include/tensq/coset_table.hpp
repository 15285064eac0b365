#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "tensq/presentation.hpp"
#include "tensq/word.hpp"

namespace tensq {

struct EnumerationBudget {
  std::uint64_t max_cosets = 2'000'000;
  std::chrono::milliseconds max_time{120'000};
};

// Complete, collapsed coset table for a subgroup H of a finitely presented
// group.  Cosets are numbered 1..n in first-definition order with coset 1
// the subgroup itself; every generator acts as a permutation, every relator
// closes everywhere, every subgroup generator fixes coset 1, and the action
// is transitive.
class CosetTable {
 public:
  CosetTable() = default;

  // Takes a prevalidated flat table: row c-1 holds the 2k images of coset c,
  // column 2g the action of generator g and 2g+1 its inverse.
  static CosetTable from_action(std::size_t generator_count,
                                std::size_t coset_count,
                                std::vector<std::uint32_t> flat,
                                std::vector<Word> subgroup_generators);

  std::size_t coset_count() const { return n_; }
  std::size_t generator_count() const { return k_; }
  const std::vector<Word>& subgroup_generators() const { return sub_gens_; }

  std::uint32_t apply(std::uint32_t coset, int column) const {
    return tab_[(coset - 1) * 2 * k_ + column];
  }
  std::uint32_t apply_word(std::uint32_t coset, const Word& w) const;

  // Schreier-tree word carrying coset 1 to coset c (built by a breadth
  // first pass over the finished table, so it is deterministic and never
  // references collapsed cosets).
  Word coset_word(std::uint32_t c) const;

  // Tree access for callers that walk the table themselves: parent coset
  // and the column leading from it (coset 1 has parent 0).
  std::uint32_t tree_parent(std::uint32_t c) const { return parent_[c]; }
  int tree_column(std::uint32_t c) const { return parent_col_[c]; }

  // The four table invariants, checked against a presentation.  `sample`
  // limits how many cosets get a full relator scan (0 = all of them).
  bool validate(const Presentation& p, std::size_t sample = 0) const;

  friend bool operator==(const CosetTable&, const CosetTable&) = default;

 private:
  void build_tree();

  std::size_t k_ = 0;
  std::size_t n_ = 0;
  std::vector<std::uint32_t> tab_;
  std::vector<Word> sub_gens_;
  std::vector<std::uint32_t> parent_;
  std::vector<int> parent_col_;
};

// Statistics from the most recent enumeration (deterministic quantities
// only; wall-clock time is deliberately not part of any report).
struct EnumerationStats {
  std::uint64_t cosets_defined = 0;   // total rows ever allocated
  std::uint64_t final_cosets = 0;
  std::uint64_t compactions = 0;
};

// HLT-style coset enumeration with lookahead collapse.  Throws
// BudgetExceeded if the table cannot be completed within the budget; never
// returns a partial table.
CosetTable todd_coxeter(const Presentation& p,
                        const std::vector<Word>& subgroup_generators,
                        const EnumerationBudget& budget,
                        EnumerationStats* stats = nullptr);

std::uint64_t group_order(const Presentation& p,
                          const EnumerationBudget& budget);

// Coset table of the derived subgroup, constructed from the Smith normal
// form of the relation matrix (cosets are the elements of G^ab).  Throws
// BadParams when the abelianization is infinite.
CosetTable derived_subgroup_table(const Presentation& p);

}  // namespace tensq

#pragma once

#include <cstdint>
#include <vector>

#include "tensq/abelian.hpp"
#include "tensq/coset_table.hpp"
#include "tensq/perm.hpp"
#include "tensq/perm_group.hpp"

namespace tensq {

// Explicit multiplication table of a finite group; elements are 0..n-1.
// This is both the input format of the definitional tensor-square method
// and the workhorse for subgroup arithmetic on computed tensor squares.
class MulTable {
 public:
  MulTable() = default;

  // table[a*n + b] = a*b; validated (rows/columns permutations, two-sided
  // identity, inverses) with associativity spot-checked.
  MulTable(std::uint32_t n, std::vector<std::uint32_t> table,
           std::uint32_t identity);

  // Regular representation of a trivial-subgroup coset table: element i is
  // coset i+1, products walk the definition tree.
  static MulTable from_regular_table(const CosetTable& t);

  std::uint32_t size() const { return n_; }
  std::uint32_t identity() const { return id_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return tab_[(std::size_t)a * n_ + b];
  }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t conj(std::uint32_t x, std::uint32_t y) const {
    return mul(mul(x, y), inv(x));  // x y x^-1
  }
  std::uint32_t comm(std::uint32_t a, std::uint32_t b) const {
    return mul(mul(a, b), mul(inv(a), inv(b)));
  }

  std::uint64_t element_order(std::uint32_t a) const;
  bool is_abelian() const;

  // Sorted element set of the subgroup generated by seeds (contains the
  // identity).
  std::vector<std::uint32_t> subgroup_closure(
      std::vector<std::uint32_t> seeds) const;

  // Subgroup generated by all commutators (normal by construction).
  std::vector<std::uint32_t> derived_subgroup() const;

  // Invariant factors of an abelian subgroup given as a sorted closed set;
  // verifies closure and commutativity.
  AbelianGroup abelian_type(const std::vector<std::uint32_t>& subgroup) const;

  // Invariant factors of big/small for small normal in big with abelian
  // quotient (orders of cosets are counted directly).
  AbelianGroup abelian_quotient_type(
      const std::vector<std::uint32_t>& big,
      const std::vector<std::uint32_t>& small) const;

  // True iff every element of s commutes with every group element.
  bool subset_central(const std::vector<std::uint32_t>& s) const;

  // True iff [s, G] lands inside target (sorted set).
  bool commutators_into(const std::vector<std::uint32_t>& s,
                        const std::vector<std::uint32_t>& target) const;

  // Right-regular permutation representation of selected elements.
  PermGroup regular_perm_group(const std::vector<std::uint32_t>& gens) const;

  // MulTable invariants: identity/inverses exact, associativity on all
  // triples for n <= 24, on a fixed pseudorandom sample otherwise.
  void spot_verify() const;

 private:
  std::uint32_t n_ = 0;
  std::uint32_t id_ = 0;
  std::vector<std::uint32_t> tab_;
  std::vector<std::uint32_t> inv_;
};

}  // namespace tensq

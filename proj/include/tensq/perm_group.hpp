#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "tensq/abelian.hpp"
#include "tensq/coset_table.hpp"
#include "tensq/perm.hpp"

namespace tensq {

// Finite permutation group with a deterministic stabilizer chain (base
// points are the smallest moved points, orbits in breadth-first discovery
// order).  The chain is built on first use and cached; construction is
// serialized so concurrent readers are safe.
class PermGroup {
 public:
  PermGroup() : degree_(1) {}
  PermGroup(std::uint32_t degree, std::vector<Perm> generators);

  std::uint32_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  mpz_class order() const;
  bool contains(const Perm& g) const;
  bool is_trivial() const;
  bool is_abelian() const;

  // Invariant factors of an abelian group (throws NotAbelian otherwise).
  // Works by element enumeration, which is fine at desk scale; the heavy
  // tensor pipeline uses multiplication tables instead.
  AbelianGroup abelian_invariants() const;

  // Generators of the pointwise stabilizer of {0..prefix-1}, computed from
  // a chain whose base is forced through the prefix points first.
  std::vector<Perm> pointwise_stabilizer(std::uint32_t prefix) const;

 private:
  struct Chain;
  const Chain& chain() const;
  std::shared_ptr<const Chain> build(std::uint32_t forced_prefix) const;

  std::uint32_t degree_;
  std::vector<Perm> gens_;
  mutable std::shared_ptr<const Chain> chain_;
  mutable std::mutex mu_;

 public:
  PermGroup(const PermGroup& o) : degree_(o.degree_), gens_(o.gens_) {}
  PermGroup& operator=(const PermGroup& o) {
    degree_ = o.degree_;
    gens_ = o.gens_;
    chain_.reset();
    return *this;
  }
};

// Smallest normal subgroup of g containing the given elements.
PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds);

// Permutations realizing the coset action, one per generator; relators act
// as the identity and a trivial-subgroup table gives the regular
// representation.
std::vector<Perm> perm_rep(const CosetTable& t);

}  // namespace tensq

#include "tensq/mul_table.hpp"

#include <algorithm>

#include "tensq/errors.hpp"

namespace tensq {

MulTable::MulTable(std::uint32_t n, std::vector<std::uint32_t> table,
                   std::uint32_t identity)
    : n_(n), id_(identity), tab_(std::move(table)) {
  internal_check(n_ >= 1 && tab_.size() == (std::size_t)n_ * n_,
                 "multiplication table shape mismatch");
  internal_check(id_ < n_, "identity index out of range");
  std::vector<bool> seen(n_);
  for (std::uint32_t a = 0; a < n_; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::uint32_t b = 0; b < n_; ++b) {
      std::uint32_t c = mul(a, b);
      internal_check(c < n_ && !seen[c], "table row is not a permutation");
      seen[c] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (std::uint32_t b = 0; b < n_; ++b) {
      std::uint32_t c = mul(b, a);
      internal_check(c < n_ && !seen[c], "table column is not a permutation");
      seen[c] = true;
    }
    internal_check(mul(id_, a) == a && mul(a, id_) == a,
                   "identity is not two-sided");
  }
  inv_.assign(n_, 0);
  for (std::uint32_t a = 0; a < n_; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < n_; ++b)
      if (mul(a, b) == id_) {
        internal_check(mul(b, a) == id_, "one-sided inverse");
        inv_[a] = b;
        found = true;
        break;
      }
    internal_check(found, "element without inverse");
  }
}

MulTable MulTable::from_regular_table(const CosetTable& t) {
  const std::uint32_t n = (std::uint32_t)t.coset_count();
  std::vector<std::uint32_t> tab((std::size_t)n * n);

  // Order elements so a coset's tree parent is processed first.
  std::vector<std::uint32_t> depth(n + 1, 0);
  std::vector<std::uint32_t> order;
  order.reserve(n);
  for (std::uint32_t c = 1; c <= n; ++c) order.push_back(c);
  for (std::uint32_t c = 2; c <= n; ++c) {
    std::uint32_t d = 0, x = c;
    while (x != 1) {
      x = t.tree_parent(x);
      ++d;
    }
    depth[c] = d;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     return depth[a] < depth[b];
                   });

  // mul(a, c) column by column: c = parent * gen, so the column of c is
  // the gen column applied to the column of the parent.
  for (std::uint32_t c : order) {
    if (c == 1) {
      for (std::uint32_t a = 0; a < n; ++a) tab[(std::size_t)a * n] = a;
      continue;
    }
    std::uint32_t p = t.tree_parent(c);
    int col = t.tree_column(c);
    for (std::uint32_t a = 0; a < n; ++a) {
      std::uint32_t ap = tab[(std::size_t)a * n + (p - 1)];
      tab[(std::size_t)a * n + (c - 1)] = t.apply(ap + 1, col) - 1;
    }
  }
  return MulTable(n, std::move(tab), 0);
}

std::uint64_t MulTable::element_order(std::uint32_t a) const {
  std::uint64_t e = 1;
  std::uint32_t x = a;
  while (x != id_) {
    x = mul(x, a);
    ++e;
  }
  return e;
}

bool MulTable::is_abelian() const {
  for (std::uint32_t a = 0; a < n_; ++a)
    for (std::uint32_t b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::uint32_t> MulTable::subgroup_closure(
    std::vector<std::uint32_t> seeds) const {
  std::vector<bool> in(n_, false);
  std::vector<std::uint32_t> bfs{id_};
  in[id_] = true;
  for (std::uint32_t s : seeds) {
    internal_check(s < n_, "closure seed out of range");
    if (!in[s]) {
      in[s] = true;
      bfs.push_back(s);
    }
  }
  for (std::size_t q = 0; q < bfs.size(); ++q)
    for (std::uint32_t s : seeds) {
      std::uint32_t x = mul(bfs[q], s);
      if (!in[x]) {
        in[x] = true;
        bfs.push_back(x);
      }
    }
  std::sort(bfs.begin(), bfs.end());
  return bfs;
}

std::vector<std::uint32_t> MulTable::derived_subgroup() const {
  std::vector<std::uint32_t> comms;
  std::vector<bool> seen(n_, false);
  for (std::uint32_t a = 0; a < n_; ++a)
    for (std::uint32_t b = 0; b < n_; ++b) {
      std::uint32_t c = comm(a, b);
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  return subgroup_closure(comms);
}

AbelianGroup MulTable::abelian_type(
    const std::vector<std::uint32_t>& subgroup) const {
  for (std::size_t i = 0; i < subgroup.size(); ++i)
    for (std::size_t j = i + 1; j < subgroup.size(); ++j) {
      if (mul(subgroup[i], subgroup[j]) != mul(subgroup[j], subgroup[i]))
        throw NotAbelian("subgroup is not abelian");
      internal_check(std::binary_search(subgroup.begin(), subgroup.end(),
                                        mul(subgroup[i], subgroup[j])),
                     "subgroup set is not closed");
    }
  std::vector<std::uint64_t> orders;
  orders.reserve(subgroup.size());
  for (std::uint32_t s : subgroup) orders.push_back(element_order(s));
  return abelian_type_from_element_orders(orders);
}

AbelianGroup MulTable::abelian_quotient_type(
    const std::vector<std::uint32_t>& big,
    const std::vector<std::uint32_t>& small) const {
  internal_check(big.size() % small.size() == 0,
                 "quotient size is not integral");
  // Normality of small in big (conjugation test).
  for (std::uint32_t b : big)
    for (std::uint32_t s : small)
      internal_check(
          std::binary_search(small.begin(), small.end(), conj(b, s)),
          "denominator subgroup is not normal");
  // Coset orders: order of x mod small = least e with x^e in small.
  std::vector<std::uint64_t> orders;
  std::vector<bool> labelled(n_, false);
  for (std::uint32_t x : big) {
    if (labelled[x]) continue;
    for (std::uint32_t s : small) labelled[mul(x, s)] = true;
    std::uint64_t e = 1;
    std::uint32_t p = x;
    while (!std::binary_search(small.begin(), small.end(), p)) {
      p = mul(p, x);
      ++e;
    }
    orders.push_back(e);
    // Quotient must be abelian for the order-count reconstruction.
  }
  internal_check(orders.size() == big.size() / small.size(),
                 "coset count mismatch");
  for (std::uint32_t x : big)
    for (std::uint32_t y : big)
      internal_check(
          std::binary_search(small.begin(), small.end(), comm(x, y)),
          "quotient is not abelian");
  return abelian_type_from_element_orders(orders);
}

bool MulTable::subset_central(const std::vector<std::uint32_t>& s) const {
  for (std::uint32_t x : s)
    for (std::uint32_t g = 0; g < n_; ++g)
      if (mul(x, g) != mul(g, x)) return false;
  return true;
}

bool MulTable::commutators_into(
    const std::vector<std::uint32_t>& s,
    const std::vector<std::uint32_t>& target) const {
  for (std::uint32_t x : s)
    for (std::uint32_t g = 0; g < n_; ++g)
      if (!std::binary_search(target.begin(), target.end(), comm(x, g)))
        return false;
  return true;
}

PermGroup MulTable::regular_perm_group(
    const std::vector<std::uint32_t>& gens) const {
  std::vector<Perm> perms;
  std::vector<Perm> seen;
  for (std::uint32_t g : gens) {
    std::vector<std::uint32_t> img(n_);
    for (std::uint32_t x = 0; x < n_; ++x) img[x] = mul(x, g);
    Perm p{std::move(img)};
    if (p.is_identity()) continue;
    if (std::find(perms.begin(), perms.end(), p) == perms.end())
      perms.push_back(p);
  }
  return PermGroup(n_, perms);
}

void MulTable::spot_verify() const {
  // Rows/columns/identity/inverses were verified at construction.
  auto check_triple = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    internal_check(mul(mul(a, b), c) == mul(a, mul(b, c)),
                   "associativity failure");
  };
  if (n_ <= 24) {
    for (std::uint32_t a = 0; a < n_; ++a)
      for (std::uint32_t b = 0; b < n_; ++b)
        for (std::uint32_t c = 0; c < n_; ++c) check_triple(a, b, c);
    return;
  }
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  for (int i = 0; i < 4096; ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    std::uint32_t a = (std::uint32_t)((state >> 33) % n_);
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    std::uint32_t b = (std::uint32_t)((state >> 33) % n_);
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    std::uint32_t c = (std::uint32_t)((state >> 33) % n_);
    check_triple(a, b, c);
  }
}

}  // namespace tensq

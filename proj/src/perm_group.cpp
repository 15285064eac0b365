#include "tensq/perm_group.hpp"

#include <algorithm>
#include <set>

#include "tensq/errors.hpp"

namespace tensq {

// Deterministic Schreier-Sims stabilizer chain.  levels[i].gens holds the
// strong generators first inserted at level i; the stabilizer subgroup at
// level i is generated by the gens of all levels >= i, each of which fixes
// the bases of levels < i.  Transversals are Schreier vectors storing
// stable (level, index) references; coset representatives are composed on
// demand.
struct PermGroup::Chain {
  struct GenRef {
    std::uint32_t level;
    std::uint32_t idx;
  };
  struct Level {
    std::uint32_t base = 0;
    std::vector<Perm> gens;
    std::vector<std::int64_t> parent;  // -1 = not in orbit, base maps to self
    std::vector<GenRef> via;
    std::vector<std::uint32_t> orbit;  // discovery order
  };

  std::uint32_t degree = 1;
  std::vector<Level> levels;

  const Perm& gen(GenRef r) const { return levels[r.level].gens[r.idx]; }

  // All generator references of the level-i subgroup, in (level, idx) order.
  std::vector<GenRef> gen_refs(std::size_t i) const {
    std::vector<GenRef> out;
    for (std::size_t j = i; j < levels.size(); ++j)
      for (std::uint32_t x = 0; x < levels[j].gens.size(); ++x)
        out.push_back(GenRef{(std::uint32_t)j, x});
    return out;
  }

  void recompute_orbit(std::size_t i) {
    Level& L = levels[i];
    auto refs = gen_refs(i);
    L.parent.assign(degree, -1);
    L.via.assign(degree, GenRef{0, 0});
    L.orbit.clear();
    L.parent[L.base] = L.base;
    L.orbit.push_back(L.base);
    for (std::size_t q = 0; q < L.orbit.size(); ++q) {
      std::uint32_t p = L.orbit[q];
      for (const GenRef& r : refs) {
        std::uint32_t to = gen(r)(p);
        if (L.parent[to] < 0) {
          L.parent[to] = p;
          L.via[to] = r;
          L.orbit.push_back(to);
        }
      }
    }
  }

  // Transversal element carrying base(i) to point.
  Perm rep(std::size_t i, std::uint32_t point) const {
    const Level& L = levels[i];
    std::vector<GenRef> path;
    std::uint32_t x = point;
    while (x != L.base) {
      path.push_back(L.via[x]);
      x = (std::uint32_t)L.parent[x];
    }
    Perm u(degree);
    for (auto it = path.rbegin(); it != path.rend(); ++it) u = gen(*it) * u;
    return u;
  }

  // Sift g through levels from..; returns the residue and the level the
  // sift stopped at (levels.size() when it ran off the end).
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const {
    for (std::size_t i = from; i < levels.size(); ++i) {
      if (g.is_identity()) return {g, i};
      std::uint32_t p = g(levels[i].base);
      if (p == levels[i].base) continue;
      if (levels[i].parent[p] < 0) return {g, i};
      g = rep(i, p).inverse() * g;
    }
    return {g, levels.size()};
  }

  static std::uint32_t smallest_moved(const Perm& g) {
    for (std::uint32_t x = 0; x < g.degree(); ++x)
      if (g(x) != x) return x;
    throw InternalCheckFailure("identity offered as strong generator");
  }

  // Insert a residue known to fix the bases of levels < j.
  void place(std::size_t j, const Perm& g) {
    if (j == levels.size()) {
      Level L;
      L.base = smallest_moved(g);
      levels.push_back(std::move(L));
      recompute_orbit(levels.size() - 1);
    }
    levels[j].gens.push_back(g);
    recompute_orbit(j);
  }

  // One verification pass over level i's Schreier generators.  Returns the
  // level where a new strong generator was inserted, or -1 if clean.
  std::int64_t verify_level(std::size_t i) {
    recompute_orbit(i);
    const Level& L = levels[i];
    for (std::size_t q = 0; q < L.orbit.size(); ++q) {
      std::uint32_t p = L.orbit[q];
      Perm tp = rep(i, p);
      auto refs = gen_refs(i);
      for (const GenRef& r : refs) {
        const Perm& g = gen(r);
        Perm s = rep(i, g(p)).inverse() * (g * tp);
        if (s.is_identity()) continue;
        auto [res, j] = sift(s, i + 1);
        if (!res.is_identity()) {
          std::size_t at = std::max(j, i + 1);
          place(at, res);
          return (std::int64_t)at;
        }
      }
    }
    return -1;
  }

  void complete() {
    if (levels.empty()) return;
    std::int64_t i = (std::int64_t)levels.size() - 1;
    while (i >= 0) {
      std::int64_t j = verify_level((std::size_t)i);
      if (j < 0)
        --i;
      else
        i = j;
    }
  }

  mpz_class order() const {
    mpz_class n = 1;
    for (const Level& L : levels) n *= (unsigned long)L.orbit.size();
    return n;
  }

  bool contains(const Perm& g) const {
    auto [res, lvl] = sift(g, 0);
    (void)lvl;
    return res.is_identity();
  }
};

PermGroup::PermGroup(std::uint32_t degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  if (degree_ == 0) throw BadParams("permutation degree must be positive");
  for (const Perm& g : gens_)
    if (g.degree() != degree_) throw BadParams("generator degree mismatch");
}

std::shared_ptr<const PermGroup::Chain> PermGroup::build(
    std::uint32_t forced_prefix) const {
  auto chain = std::make_shared<Chain>();
  chain->degree = degree_;
  // Seed one level per moved prefix point, in order, so the pointwise
  // stabilizer of the prefix is a tail of the chain.
  if (forced_prefix > 0) {
    std::vector<bool> moved(degree_, false);
    for (const Perm& g : gens_)
      for (std::uint32_t x = 0; x < degree_ && x < forced_prefix; ++x)
        if (g(x) != x) moved[x] = true;
    for (std::uint32_t x = 0; x < forced_prefix && x < degree_; ++x)
      if (moved[x]) {
        Chain::Level L;
        L.base = x;
        chain->levels.push_back(std::move(L));
        chain->recompute_orbit(chain->levels.size() - 1);
      }
  }
  for (const Perm& g : gens_) {
    if (g.is_identity()) continue;
    auto [res, i] = chain->sift(g, 0);
    if (!res.is_identity()) chain->place(i, res);
  }
  chain->complete();
  return chain;
}

const PermGroup::Chain& PermGroup::chain() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!chain_) chain_ = build(0);
  return *chain_;
}

mpz_class PermGroup::order() const { return chain().order(); }

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) throw DimensionMismatch("degree mismatch");
  return chain().contains(g);
}

bool PermGroup::is_trivial() const {
  for (const Perm& g : gens_)
    if (!g.is_identity()) return false;
  return true;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i] * gens_[j] != gens_[j] * gens_[i]) return false;
  return true;
}

AbelianGroup PermGroup::abelian_invariants() const {
  if (!is_abelian())
    throw NotAbelian("abelian_invariants: group is not abelian");
  mpz_class n = order();
  if (n > 65536 || degree_ > 4096)
    throw Error("abelian_invariants: group too large for enumeration");
  std::set<Perm> elements;
  std::vector<Perm> queue{Perm(degree_)};
  elements.insert(queue[0]);
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const Perm& g : gens_) {
      Perm h = g * queue[q];
      if (elements.insert(h).second) queue.push_back(h);
    }
  internal_check(mpz_class((unsigned long)elements.size()) == n,
                 "element enumeration disagrees with chain order");
  std::vector<std::uint64_t> orders;
  orders.reserve(elements.size());
  for (const Perm& e : elements) orders.push_back(e.order().get_ui());
  return abelian_type_from_element_orders(orders);
}

std::vector<Perm> PermGroup::pointwise_stabilizer(std::uint32_t prefix) const {
  auto chain = build(prefix);
  std::vector<Perm> out;
  for (const auto& level : chain->levels) {
    if (level.base < prefix) continue;
    for (const Perm& g : level.gens) out.push_back(g);
  }
  for (const Perm& g : out)
    for (std::uint32_t x = 0; x < prefix; ++x)
      internal_check(g(x) == x, "stabilizer generator moves a prefix point");
  return out;
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds) {
  std::vector<Perm> closure;
  for (const Perm& s : seeds) {
    if (s.degree() != g.degree()) throw DimensionMismatch("seed degree");
    if (!s.is_identity()) closure.push_back(s);
  }
  for (std::size_t i = 0; i < closure.size(); ++i) {
    for (const Perm& x : g.generators()) {
      Perm c = x * closure[i] * x.inverse();
      PermGroup current(g.degree(), closure);
      if (!current.contains(c)) closure.push_back(c);
    }
  }
  return PermGroup(g.degree(), closure);
}

std::vector<Perm> perm_rep(const CosetTable& t) {
  std::vector<Perm> out;
  out.reserve(t.generator_count());
  for (std::size_t g = 0; g < t.generator_count(); ++g) {
    std::vector<std::uint32_t> img(t.coset_count());
    for (std::uint32_t c = 1; c <= t.coset_count(); ++c)
      img[c - 1] = t.apply(c, 2 * (int)g) - 1;
    out.push_back(Perm(std::move(img)));
  }
  return out;
}

}  // namespace tensq

#include "tensq/reidemeister_schreier.hpp"

#include "tensq/errors.hpp"

namespace tensq {

Presentation reidemeister_schreier(const Presentation& p,
                                   const CosetTable& t) {
  if (p.generator_count() != t.generator_count())
    throw BadParams("table does not belong to this presentation");
  const std::size_t n = t.coset_count();
  const std::size_t k = t.generator_count();

  // Edge (c, g) is a tree edge if the Schreier tree uses it in either
  // direction; those Schreier generators are trivial.
  auto is_tree_edge = [&](std::uint32_t c, std::size_t g) {
    std::uint32_t d = t.apply(c, 2 * (int)g);
    if (t.tree_parent(d) == c && t.tree_column(d) == 2 * (int)g) return true;
    if (t.tree_parent(c) == d && t.tree_column(c) == 2 * (int)g + 1)
      return true;
    return false;
  };

  // Index the nontrivial Schreier generators in (coset, generator) order.
  std::vector<int> schreier_index(n * k, -1);
  int count = 0;
  for (std::uint32_t c = 1; c <= n; ++c)
    for (std::size_t g = 0; g < k; ++g)
      if (!is_tree_edge(c, g)) schreier_index[(c - 1) * k + g] = count++;

  std::vector<std::string> names;
  names.reserve(count);
  for (int i = 1; i <= count; ++i) names.push_back("s" + std::to_string(i));

  // Rewrite word w starting at coset c in terms of Schreier generators.
  auto rewrite = [&](std::uint32_t c, const Word& w) {
    Word out;
    std::uint32_t x = c;
    for (int col : flatten(w)) {
      if (col % 2 == 0) {
        std::size_t g = col / 2;
        int s = schreier_index[(x - 1) * k + g];
        if (s >= 0) out.append(s, 1);
        x = t.apply(x, col);
      } else {
        std::size_t g = col / 2;
        std::uint32_t y = t.apply(x, col);  // edge (y, g) traversed backwards
        int s = schreier_index[(y - 1) * k + g];
        if (s >= 0) out.append(s, -1);
        x = y;
      }
    }
    internal_check(x == c, "relator did not close during rewriting");
    return out;
  };

  std::vector<Word> relators;
  for (std::uint32_t c = 1; c <= n; ++c)
    for (const Word& r : p.relators()) relators.push_back(rewrite(c, r));

  return Presentation(p.name() + "_sub", std::move(names),
                      std::move(relators));
}

}  // namespace tensq

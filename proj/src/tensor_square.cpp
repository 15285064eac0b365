#include "tensq/tensor_square.hpp"

#include <algorithm>
#include <sstream>

#include "tensq/errors.hpp"
#include "tensq/group_hom.hpp"

namespace tensq {

namespace {

std::string unique_phi_name(const std::string& base,
                            const std::vector<std::string>& taken) {
  std::string cand = base + "ph";
  while (std::find(taken.begin(), taken.end(), cand) != taken.end())
    cand += "_";
  return cand;
}

Word shift_word(const Word& w, int by) {
  Word out;
  for (const Letter& l : w.syllables()) out.append(l.gen + by, l.exp);
  return out;
}

}  // namespace

Presentation nu_presentation(const Presentation& p) {
  const int k = (int)p.generator_count();
  std::vector<std::string> names = p.generator_names();
  for (int i = 0; i < k; ++i)
    names.push_back(unique_phi_name(p.generator_names()[i], names));

  std::vector<Word> relators = p.relators();
  for (const Word& r : p.relators()) relators.push_back(shift_word(r, k));

  for (int x = 0; x < k; ++x)
    for (int g = 0; g < k; ++g)
      for (int h = 0; h < k; ++h) {
        Word base = commutator(Word::single(g), Word::single(k + h));
        Word rhs = commutator(conjugate(Word::single(x), Word::single(g)),
                              shift_word(conjugate(Word::single(x),
                                                   Word::single(h)),
                                         k));
        relators.push_back(conjugate(Word::single(x), base) * inverse(rhs));
        relators.push_back(conjugate(Word::single(k + x), base) *
                           inverse(rhs));
      }
  return Presentation("nu_" + p.name(), std::move(names), std::move(relators));
}

MulTable mul_table_from_presentation(const Presentation& p,
                                     const EnumerationBudget& budget) {
  MulTable t = MulTable::from_regular_table(todd_coxeter(p, {}, budget));
  t.spot_verify();
  return t;
}

namespace {

// Shared tail of both methods: given the tensor group as a multiplication
// table with kappa tracked per element, cut out nabla, J2, M and check the
// exactness arithmetic.
TensorSquareData derive_data(TensorMethod method, MulTable tensor_tab,
                             std::vector<std::uint32_t> kappa,
                             const std::vector<std::uint32_t>& nabla_seeds,
                             std::vector<std::uint32_t> gen_elems,
                             MulTable g_tab, TensorStats stats) {
  TensorSquareData d;
  d.method = method;
  d.tensor_order = tensor_tab.size();
  d.stats = stats;

  const std::uint32_t g_id = g_tab.identity();
  for (std::uint32_t x = 0; x < tensor_tab.size(); ++x)
    if (kappa[x] == g_id) d.j2_elements.push_back(x);
  d.j2_order = d.j2_elements.size();

  std::vector<bool> hit(g_tab.size(), false);
  std::uint64_t image = 0;
  for (std::uint32_t x = 0; x < tensor_tab.size(); ++x)
    if (!hit[kappa[x]]) {
      hit[kappa[x]] = true;
      ++image;
    }
  d.derived_order = image;
  internal_check(d.j2_order * d.derived_order == d.tensor_order,
                 "kappa fibers are not equal-sized");

  d.nabla_elements = tensor_tab.subgroup_closure(nabla_seeds);
  d.nabla_order = d.nabla_elements.size();
  for (std::uint32_t x : d.nabla_elements)
    internal_check(kappa[x] == g_id, "nabla escapes the kernel of kappa");
  internal_check(d.tensor_order % d.nabla_order == 0,
                 "nabla order does not divide the tensor order");
  d.exterior_order = d.tensor_order / d.nabla_order;

  d.j2 = tensor_tab.abelian_type(d.j2_elements);
  d.nabla = tensor_tab.abelian_type(d.nabla_elements);
  d.schur = tensor_tab.abelian_quotient_type(d.j2_elements, d.nabla_elements);
  d.schur_order = d.j2_order / d.nabla_order;
  internal_check(d.exterior_order == d.schur_order * d.derived_order,
                 "exterior order identity failed");
  internal_check(
      order_ab(d.j2).value_or(0) == mpz_class((unsigned long)d.j2_order) &&
          order_ab(d.nabla).value_or(0) ==
              mpz_class((unsigned long)d.nabla_order),
      "abelian type order mismatch");

  d.generator_elements = std::move(gen_elems);
  d.tensor_group = tensor_tab.regular_perm_group(d.generator_elements);
  d.kappa = std::move(kappa);

  std::vector<std::uint32_t> everything(g_tab.size());
  for (std::uint32_t i = 0; i < g_tab.size(); ++i) everything[i] = i;
  d.g_ab = g_tab.abelian_quotient_type(everything, g_tab.derived_subgroup());
  d.g_table = std::move(g_tab);
  d.tensor_table = std::move(tensor_tab);
  return d;
}

// Multiplication table over a set of elements acting freely (elements are
// identified with the points of one orbit): discovery[b] = (parent, gen)
// with element_b = element_parent * gen, columns filled by dynamic
// programming over the discovery tree.
MulTable table_from_free_action(
    std::uint32_t n, const std::vector<std::vector<std::uint32_t>>& gen_perm,
    const std::vector<std::int64_t>& parent,
    const std::vector<std::int64_t>& via) {
  std::vector<std::uint32_t> tab((std::size_t)n * n);
  std::vector<std::uint32_t> order;  // elements in tree order
  order.reserve(n);
  std::vector<bool> done(n, false);
  order.push_back(0);
  done[0] = true;
  for (std::size_t q = 0; q < order.size(); ++q)
    for (std::uint32_t b = 0; b < n; ++b)
      if (!done[b] && parent[b] == (std::int64_t)order[q]) {
        done[b] = true;
        order.push_back(b);
      }
  internal_check(order.size() == n, "free-action tree does not span");

  for (std::uint32_t b : order) {
    if (b == 0) {
      for (std::uint32_t a = 0; a < n; ++a) tab[(std::size_t)a * n] = a;
      continue;
    }
    const auto& g = gen_perm[(std::size_t)via[b]];
    std::uint32_t pb = (std::uint32_t)parent[b];
    for (std::uint32_t a = 0; a < n; ++a)
      tab[(std::size_t)a * n + b] = g[tab[(std::size_t)a * n + pb]];
  }
  return MulTable(n, std::move(tab), 0);
}

}  // namespace

TensorSquareData tensor_square_nu(const Presentation& p,
                                  const EnumerationBudget& budget) {
  const int k = (int)p.generator_count();

  CosetTable g_ct = todd_coxeter(p, {}, budget);
  const std::uint32_t n_g = (std::uint32_t)g_ct.coset_count();
  MulTable g_tab = MulTable::from_regular_table(g_ct);

  Presentation nu = nu_presentation(p);

  // The evaluation map g -> g, g^phi -> g must be a homomorphism; this
  // also certifies the generated relator set.  Images are the inverse
  // columns: right-multiplication columns compose contravariantly, so
  // g -> (column of g)^-1 is the homomorphic regular embedding.
  {
    std::vector<Perm> imgs;
    for (int rep = 0; rep < 2; ++rep)
      for (int i = 0; i < k; ++i) {
        std::vector<std::uint32_t> im(n_g);
        for (std::uint32_t c = 1; c <= n_g; ++c)
          im[c - 1] = g_ct.apply(c, 2 * i + 1) - 1;
        imgs.push_back(Perm(std::move(im)));
      }
    GroupHom::from_presentation(nu, n_g, imgs);
  }

  std::vector<Word> phi_sub;
  for (int i = 0; i < k; ++i) phi_sub.push_back(Word::single(k + i));
  EnumerationStats st;
  CosetTable nu_ct;
  try {
    nu_ct = todd_coxeter(nu, phi_sub, budget, &st);
  } catch (const BudgetExceeded& e) {
    throw NotFinite(std::string("nu-group enumeration did not close: ") +
                        e.what(),
                    e.cosets_defined);
  }
  const std::uint32_t degree = (std::uint32_t)nu_ct.coset_count();
  internal_check(degree % std::max(n_g, 1u) == 0,
                 "phi-subgroup index is not a multiple of |G|");

  // Normal closure of the generator commutators, with elements identified
  // by the point they carry the base coset to (the closure acts freely on
  // these cosets, so the identification is exact).
  std::vector<Word> cl_words;
  std::vector<std::uint32_t> in_orbit(degree + 1, 0);
  std::vector<std::uint32_t> orbit;

  auto apply_w = [&](std::uint32_t pt, const Word& w) {
    return nu_ct.apply_word(pt, w);
  };

  orbit.push_back(1);
  in_orbit[1] = 1;
  auto grow_orbit = [&]() {
    for (std::size_t q = 0; q < orbit.size(); ++q)
      for (std::size_t gi = 0; gi < cl_words.size(); ++gi) {
        std::uint32_t to = apply_w(orbit[q], cl_words[gi]);
        if (!in_orbit[to]) {
          in_orbit[to] = 1;
          orbit.push_back(to);
        }
      }
  };

  // Seeds whose point is already reached are products of earlier
  // generators (the action is free), so only new points add generators.
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Word w = commutator(Word::single(i), Word::single(k + j));
      std::uint32_t pt = apply_w(1, w);
      if (!in_orbit[pt]) {
        cl_words.push_back(w);
        grow_orbit();
      }
    }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t gi = 0; gi < cl_words.size(); ++gi)
      for (int x = 0; x < 2 * k; ++x) {
        Word c = conjugate(Word::single(x), cl_words[gi]);
        std::uint32_t pt = apply_w(1, c);
        if (!in_orbit[pt]) {
          cl_words.push_back(c);
          grow_orbit();
          changed = true;
        }
      }
  }

  const std::uint32_t n_t = (std::uint32_t)orbit.size();
  internal_check((std::uint64_t)n_t * n_g == degree,
                 "tensor subgroup does not act freely with |G| orbits");
  if (n_t > 16384)
    throw BudgetExceeded(
        "tensor square of order " + std::to_string(n_t) +
            " exceeds the table-based decomposition bound",
        n_t);

  std::vector<std::int64_t> point_index(degree + 1, -1);
  for (std::uint32_t i = 0; i < n_t; ++i) point_index[orbit[i]] = i;

  // Restrict the closure generators to the orbit.
  std::vector<std::vector<std::uint32_t>> gen_perm;
  for (const Word& w : cl_words) {
    std::vector<std::uint32_t> img(n_t);
    for (std::uint32_t i = 0; i < n_t; ++i) {
      std::uint32_t to = apply_w(orbit[i], w);
      internal_check(point_index[to] >= 0, "orbit is not closed");
      img[i] = (std::uint32_t)point_index[to];
    }
    gen_perm.push_back(std::move(img));
  }

  // Discovery tree over elements (right multiplication by closure gens).
  std::vector<std::int64_t> parent(n_t, -1), via(n_t, -1);
  std::vector<std::uint32_t> bfs{0};
  parent[0] = 0;
  for (std::size_t q = 0; q < bfs.size(); ++q)
    for (std::size_t gi = 0; gi < gen_perm.size(); ++gi) {
      std::uint32_t to = gen_perm[gi][bfs[q]];
      if (parent[to] < 0) {
        parent[to] = bfs[q];
        via[to] = (std::int64_t)gi;
        bfs.push_back(to);
      }
    }
  parent[0] = 0;
  MulTable tensor_tab = table_from_free_action(n_t, gen_perm, parent, via);
  tensor_tab.spot_verify();

  // kappa on generators: evaluate closure words in G (g and g^phi both
  // read as g); then along the tree.
  auto eval_in_g = [&](const Word& w) {
    std::uint32_t c = 1;
    for (const Letter& l : w.syllables()) {
      int base_gen = l.gen % k;
      int col = l.exp > 0 ? 2 * base_gen : 2 * base_gen + 1;
      long long e = std::abs((long long)l.exp);
      for (long long i = 0; i < e; ++i) c = g_ct.apply(c, col);
    }
    return c - 1;
  };
  std::vector<std::uint32_t> kappa_gen;
  for (const Word& w : cl_words) kappa_gen.push_back(eval_in_g(w));

  std::vector<std::uint32_t> kappa(n_t, 0);
  std::vector<bool> kdone(n_t, false);
  kdone[0] = true;
  for (std::size_t q = 0; q < bfs.size(); ++q) {
    std::uint32_t b = bfs[q];
    if (b != 0) kappa[b] = g_tab.mul(kappa[(std::uint32_t)parent[b]],
                                     kappa_gen[(std::size_t)via[b]]);
  }

  // nabla seeds: [w, w^phi] over a transversal word for every element of G.
  std::vector<std::uint32_t> nabla_seeds;
  for (std::uint32_t e = 0; e < n_g; ++e) {
    Word w = g_ct.coset_word(e + 1);
    Word seed = commutator(w, shift_word(w, k));
    std::uint32_t pt = apply_w(1, seed);
    internal_check(point_index[pt] >= 0, "diagonal element escapes closure");
    nabla_seeds.push_back((std::uint32_t)point_index[pt]);
  }

  std::vector<std::uint32_t> gen_elems;
  for (const Word& w : cl_words)
    gen_elems.push_back((std::uint32_t)point_index[apply_w(1, w)]);

  TensorStats stats;
  stats.group_order = n_g;
  stats.action_degree = degree;
  stats.cosets_defined = st.cosets_defined;
  return derive_data(TensorMethod::Nu, std::move(tensor_tab),
                     std::move(kappa), nabla_seeds, std::move(gen_elems),
                     std::move(g_tab), stats);
}

TensorSquareData tensor_square_definitional(const MulTable& g,
                                            const EnumerationBudget& budget,
                                            std::uint32_t cap) {
  const std::uint32_t n = g.size();
  if (n > cap)
    throw BadParams("definitional method limited to groups of order <= " +
                    std::to_string(cap));
  g.spot_verify();

  auto sym = [&](std::uint32_t x, std::uint32_t y) { return x * n + y; };
  std::vector<std::string> names;
  names.reserve((std::size_t)n * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      names.push_back("t" + std::to_string(x) + "_" + std::to_string(y));

  std::vector<Word> relators;
  relators.reserve(2 * (std::size_t)n * n * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z) {
        // xy (x) z = (xy (x) xz)(x (x) z) with xy, xz conjugates.
        Word r = Word::single(sym(g.conj(x, y), g.conj(x, z)));
        r.append(Word::single(sym(x, z)));
        r.append(inverse(Word::single(sym(g.mul(x, y), z))));
        relators.push_back(r);
        // x (x) zt = (x (x) z)(zx (x) zt).
        Word s = Word::single(sym(x, y)); // here y plays the role of z
        s.append(Word::single(sym(g.conj(y, x), g.conj(y, z))));
        s.append(inverse(Word::single(sym(x, g.mul(y, z)))));
        relators.push_back(s);
      }

  Presentation tp("tensor_symbols", std::move(names), std::move(relators));
  EnumerationStats st;
  CosetTable ct = todd_coxeter(tp, {}, budget, &st);
  if (ct.coset_count() > 16384)
    throw BudgetExceeded(
        "tensor square of order " + std::to_string(ct.coset_count()) +
            " exceeds the table-based decomposition bound",
        ct.coset_count());
  MulTable tensor_tab = MulTable::from_regular_table(ct);
  tensor_tab.spot_verify();
  const std::uint32_t n_t = tensor_tab.size();

  // kappa on symbols is the commutator map; extend along the tree.
  std::vector<std::uint32_t> kappa(n_t, 0);
  for (std::uint32_t c = 2; c <= n_t; ++c) {
    std::uint32_t p = ct.tree_parent(c);
    int col = ct.tree_column(c);
    std::uint32_t s = (std::uint32_t)(col / 2);
    std::uint32_t kg = g.comm(s / n, s % n);
    if (col % 2) kg = g.inv(kg);
    kappa[c - 1] = g.mul(kappa[p - 1], kg);
  }

  std::vector<std::uint32_t> nabla_seeds;
  for (std::uint32_t x = 0; x < n; ++x)
    nabla_seeds.push_back(ct.apply(1, 2 * (int)sym(x, x)) - 1);

  std::vector<std::uint32_t> gen_elems;
  for (std::uint32_t s = 0; s < n * n; ++s)
    gen_elems.push_back(ct.apply(1, 2 * (int)s) - 1);

  TensorStats stats;
  stats.group_order = n;
  stats.action_degree = n_t;
  stats.cosets_defined = st.cosets_defined;
  return derive_data(TensorMethod::Definitional, std::move(tensor_tab),
                     std::move(kappa), nabla_seeds, std::move(gen_elems),
                     MulTable(g), stats);
}

AbelianTensorData abelian_tensor_shortcut(const AbelianGroup& a) {
  AbelianTensorData out;
  out.tensor = tensor_ab(a, a);

  const std::vector<mpz_class> f = a.invariant_factors();
  const std::size_t r = f.size();
  const std::size_t J = r * r;
  if (r == 0) return out;  // trivial group

  // Basis e_i (x) e_j of Z^J; the relation lattice M makes it the tensor
  // square, and V spans the image of the squaring map.
  IntMatrix m_rows(0, J), v_rows(0, J);
  {
    std::vector<std::vector<mpz_class>> mm, vv;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        mpz_class o;
        mpz_gcd(o.get_mpz_t(), f[i].get_mpz_t(), f[j].get_mpz_t());
        if (o != 0) {
          std::vector<mpz_class> row(J, 0);
          row[i * r + j] = o;
          mm.push_back(std::move(row));
        }
      }
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<mpz_class> row(J, 0);
      row[i * r + i] = 1;
      vv.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) {
        std::vector<mpz_class> row(J, 0);
        row[i * r + j] = 1;
        row[j * r + i] = 1;
        vv.push_back(std::move(row));
      }
    m_rows = IntMatrix(mm.size(), J);
    for (std::size_t i = 0; i < mm.size(); ++i)
      for (std::size_t j = 0; j < J; ++j) m_rows.at(i, j) = mm[i][j];
    v_rows = IntMatrix(vv.size(), J);
    for (std::size_t i = 0; i < vv.size(); ++i)
      for (std::size_t j = 0; j < J; ++j) v_rows.at(i, j) = vv[i][j];
  }

  internal_check(abelian_from_matrix(m_rows) == out.tensor,
                 "tensor basis lattice disagrees with the gcd rule");

  // exterior = Z^J / (V + M)
  out.exterior = abelian_from_matrix(stack_rows(v_rows, m_rows));

  // nabla = (V + M) / M: write the M generators in a basis of V + M.
  IntMatrix basis = lattice_row_basis(stack_rows(v_rows, m_rows));
  IntMatrix coords(m_rows.rows(), basis.rows());
  for (std::size_t i = 0; i < m_rows.rows(); ++i) {
    std::vector<mpz_class> v(J);
    for (std::size_t j = 0; j < J; ++j) v[j] = m_rows.at(i, j);
    auto c = lattice_coordinates(basis, v);
    internal_check(c.has_value(), "relation row escaped the joint lattice");
    for (std::size_t j = 0; j < basis.rows(); ++j) coords.at(i, j) = (*c)[j];
  }
  out.nabla = abelian_from_matrix(coords);

  // Order and rank arithmetic across the split.
  internal_check(hirsch(out.tensor) ==
                     hirsch(out.nabla) + hirsch(out.exterior),
                 "tensor rank does not split");
  auto ot = order_ab(out.tensor);
  if (ot.has_value())
    internal_check(*ot == *order_ab(out.nabla) * *order_ab(out.exterior),
                   "tensor order does not split");
  return out;
}

bool DiagramReport::all_pass() const {
  for (const DiagramCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

DiagramReport diagram_report(const TensorSquareData& d) {
  DiagramReport r;
  auto add = [&](const std::string& name, bool pass,
                 const std::string& details) {
    r.checks.push_back(DiagramCheck{name, pass, details});
  };

  std::uint64_t g_derived = d.g_table.derived_subgroup().size();
  {
    std::ostringstream os;
    os << "image of kappa has order " << d.derived_order
       << ", derived subgroup has order " << g_derived;
    add("kappa_onto_derived", d.derived_order == g_derived, os.str());
  }
  {
    std::ostringstream os;
    os << d.tensor_order << " = " << d.nabla_order << " * "
       << d.exterior_order;
    add("tensor_eq_nabla_times_exterior",
        d.tensor_order == d.nabla_order * d.exterior_order, os.str());
  }
  {
    std::ostringstream os;
    os << d.exterior_order << " = " << d.schur_order << " * "
       << d.derived_order;
    add("exterior_eq_schur_times_derived",
        d.exterior_order == d.schur_order * d.derived_order, os.str());
  }
  {
    std::ostringstream os;
    os << d.tensor_order << " = " << d.j2_order << " * " << d.derived_order;
    add("tensor_eq_j2_times_derived",
        d.tensor_order == d.j2_order * d.derived_order, os.str());
  }
  add("j2_central_in_tensor", d.tensor_table.subset_central(d.j2_elements),
      "conjugation test over all elements");
  add("schur_central_in_exterior",
      d.tensor_table.commutators_into(d.j2_elements, d.nabla_elements),
      "[J2, T] lands in nabla");
  {
    // M abelian: commutators of J2 representatives die in nabla.
    bool ok = true;
    for (std::uint32_t x : d.j2_elements)
      for (std::uint32_t y : d.j2_elements)
        if (!std::binary_search(d.nabla_elements.begin(),
                                d.nabla_elements.end(),
                                d.tensor_table.comm(x, y)))
          ok = false;
    add("schur_abelian", ok, "[J2, J2] lands in nabla");
  }

  if (!has_two_torsion(d.g_ab)) {
    AbelianGroup gamma = gamma_whitehead(d.g_ab);
    auto go = order_ab(gamma);
    {
      std::ostringstream os;
      os << "|J2| = " << d.j2_order << ", |Gamma(G_ab)| * |M| = "
         << (go ? go->get_str() : std::string("inf")) << " * "
         << d.schur_order;
      add("j2_eq_gamma_times_schur",
          go.has_value() &&
              mpz_class((unsigned long)d.j2_order) == *go * (unsigned long)d.schur_order,
          os.str());
    }
    {
      AbelianTensorData shortcut = abelian_tensor_shortcut(d.g_ab);
      std::ostringstream os;
      os << "computed nabla " << d.nabla.to_text() << ", nabla(G_ab) "
         << shortcut.nabla.to_text();
      add("nabla_matches_abelianization", d.nabla == shortcut.nabla,
          os.str());
    }
  }
  return r;
}

}  // namespace tensq

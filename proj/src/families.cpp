#include "tensq/families.hpp"

#include <algorithm>
#include <set>

#include "tensq/errors.hpp"

namespace tensq {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long checked_pow(long base, long exp, long limit) {
  long r = 1;
  for (long i = 0; i < exp; ++i) {
    r *= base;
    if (r > limit) throw BadParams("family parameter out of supported range");
  }
  return r;
}

std::string fresh_name(const std::string& want,
                       const std::set<std::string>& taken) {
  std::string cand = want;
  while (taken.count(cand)) cand += "_";
  return cand;
}

}  // namespace

Presentation extension_presentation(const ExtensionData& e) {
  const std::size_t m = e.torsion_orders.size();
  const std::size_t r = m + e.free_rank;  // alpha count
  const std::size_t l = e.q_presentation.generator_count();

  for (std::size_t j = 1; j < m; ++j)
    if (e.torsion_orders[j - 1] > e.torsion_orders[j])
      throw BadParams("torsion orders must be ascending");
  for (long n : e.torsion_orders)
    if (n < 1) throw BadParams("torsion orders must be positive");
  if (e.action_words.size() != l)
    throw BadParams("one action row per Q-generator required");
  for (const auto& row : e.action_words)
    if (row.size() != r)
      throw BadParams("one action word per A-generator required");
  if (e.lifting_words.size() != e.q_presentation.relators().size())
    throw BadParams("one lifting word per Q-relator required");

  // alpha names first, then the Q-generator names.
  std::set<std::string> taken(e.q_presentation.generator_names().begin(),
                              e.q_presentation.generator_names().end());
  std::vector<std::string> names;
  for (std::size_t j = 0; j < r; ++j) {
    std::string n = fresh_name("a" + std::to_string(j + 1), taken);
    taken.insert(n);
    names.push_back(n);
  }
  for (const std::string& n : e.q_presentation.generator_names())
    names.push_back(n);

  auto alpha = [&](std::size_t j) { return (int)j; };
  auto gamma = [&](std::size_t i) { return (int)(r + i); };
  auto lift_q = [&](const Word& w) {  // Q-word on the gamma block
    Word out;
    for (const Letter& lt : w.syllables()) out.append(gamma(lt.gen), lt.exp);
    return out;
  };

  std::vector<Word> relators;
  // r_i(gamma) = w_i(alpha)
  for (std::size_t i = 0; i < e.q_presentation.relators().size(); ++i) {
    Word w = lift_q(e.q_presentation.relators()[i]);
    if (e.lifting_words[i].max_generator() >= (int)r)
      throw BadParams("lifting word uses an unknown A-generator");
    relators.push_back(w * inverse(e.lifting_words[i]));
  }
  // A is abelian with the given torsion.
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      relators.push_back(
          commutator(Word::single(alpha(i)), Word::single(alpha(j))));
  for (std::size_t j = 0; j < m; ++j)
    relators.push_back(Word::single(alpha(j), (int)e.torsion_orders[j]));
  // gamma_i alpha_j gamma_i^-1 = u_ij(alpha)
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Word& u = e.action_words[i][j];
      if (u.max_generator() >= (int)r)
        throw BadParams("action word uses an unknown A-generator");
      relators.push_back(conjugate(Word::single(gamma(i)),
                                   Word::single(alpha(j))) *
                         inverse(u));
    }
  return Presentation("ext_" + e.q_presentation.name(), std::move(names),
                      std::move(relators));
}

std::vector<std::vector<Word>> semidirect_action_words(
    const std::vector<IntMatrix>& mats, std::size_t free_rank,
    const std::vector<long>& torsion_orders) {
  const std::size_t r = free_rank + torsion_orders.size();
  std::vector<std::vector<Word>> out;
  for (const IntMatrix& m : mats) {
    if (m.rows() != r || m.cols() != r)
      throw DimensionMismatch("action matrix must be square of the A-rank");
    std::vector<Word> row_words;
    for (std::size_t j = 0; j < r; ++j) {
      Word u;
      for (std::size_t i = 0; i < r; ++i) {
        const mpz_class& c = m.at(j, i);
        if (c != 0) {
          if (!c.fits_sint_p())
            throw BadParams("action matrix entry out of range");
          u.append((int)i, (int)c.get_si());
        }
      }
      row_words.push_back(u);
    }
    out.push_back(std::move(row_words));
  }
  return out;
}

IntMatrix gn_action_matrix(long n) {
  if (n < 2) throw BadParams("holonomy must be at least 2");
  const std::size_t r = (std::size_t)n - 1;
  IntMatrix m(r, r);
  for (std::size_t i = 0; i + 1 < r; ++i) m.at(i, i + 1) = 1;
  for (std::size_t j = 0; j < r; ++j) m.at(r - 1, j) = -1;
  return m;
}

FamilySpec crystallographic_gn(long n) {
  if (n < 2) throw BadParams("holonomy must be at least 2");
  const int r = (int)n - 1;  // lattice generators a1..a_{n-1}
  std::vector<std::string> names;
  for (int i = 1; i <= r; ++i) names.push_back("a" + std::to_string(i));
  names.push_back("t");
  const int t = r;

  std::vector<Word> relators;
  relators.push_back(Word::single(t, (int)n));
  // t^-1 a_i t = a_{i+1} for i < n-1
  for (int i = 0; i + 1 < r; ++i)
    relators.push_back(conjugate(Word::single(t, -1), Word::single(i)) *
                       inverse(Word::single(i + 1)));
  // t^-1 a_{n-1} t = a_1^-1 ... a_{n-1}^-1
  {
    Word rhs;
    for (int i = 0; i < r; ++i) rhs.append(i, -1);
    relators.push_back(conjugate(Word::single(t, -1), Word::single(r - 1)) *
                       inverse(rhs));
  }
  for (int i = 1; i < r; ++i)
    for (int j = 0; j < i; ++j)
      relators.push_back(commutator(Word::single(i), Word::single(j)));

  FamilySpec spec;
  spec.family = Family::GN;
  spec.params = {{"n", n}};
  spec.presentation =
      Presentation("G" + std::to_string(n), std::move(names),
                   std::move(relators));
  spec.h_claimed = n - 1;
  spec.abelianization_claimed = AbelianGroup::from_cyclic_orders(
      {mpz_class(n), mpz_class(n)});
  return spec;
}

Presentation gn_derived_description(long n) {
  if (n < 2) throw BadParams("holonomy must be at least 2");
  // free abelian on the listed n-1 generators
  return free_abelian_presentation(n - 1, "d");
}

Presentation gn_quotient(long n, long m) {
  if (m < 2) throw BadParams("modulus must be at least 2");
  Presentation g = *crystallographic_gn(n).presentation;
  std::vector<Word> relators = g.relators();
  for (long i = 0; i + 1 < n; ++i)
    relators.push_back(Word::single((int)i, (int)m));
  return Presentation("G" + std::to_string(n) + "_mod" + std::to_string(m),
                      g.generator_names(), std::move(relators));
}

std::vector<int> e_vector(long p, long s) {
  if (!is_prime(p)) throw BadParams("p must be prime");
  if (s < 1) throw BadParams("s must be at least 1");
  long ps1 = checked_pow(p, s - 1, 1000000);
  long d = ps1 * (p - 1);
  std::vector<int> e;
  for (long i = 1; i <= d; ++i) e.push_back((i - 1) % ps1 == 0 ? 1 : 0);
  return e;
}

FamilySpec coclass_ks(long p, long s) {
  if (!is_prime(p)) throw BadParams("p must be prime");
  if (p == 2 && s != 1)
    throw BadParams("p = 2 is only supported with s = 1");
  if (s < 1) throw BadParams("s must be at least 1");
  const long ps = checked_pow(p, s, 1000000);
  const long d = checked_pow(p, s - 1, 1000000) * (p - 1);
  if (d > 64) throw BadParams("coclass family parameter too large");

  std::vector<int> e = e_vector(p, s);
  std::vector<std::string> names;
  for (long i = 1; i <= d; ++i) names.push_back("a" + std::to_string(i));
  names.push_back("t");
  const int t = (int)d;

  std::vector<Word> relators;
  relators.push_back(Word::single(t, (int)ps));
  // t^-1 a_1 t = a_d^-1
  relators.push_back(conjugate(Word::single(t, -1), Word::single(0)) *
                     Word::single((int)d - 1));
  // t^-1 a_i t = a_{i-1} a_d^{-e_i} for 1 < i <= d
  for (long i = 2; i <= d; ++i) {
    Word rhs = Word::single((int)i - 2);
    if (e[i - 1]) rhs.append((int)d - 1, -1);
    relators.push_back(conjugate(Word::single(t, -1), Word::single((int)i - 1)) *
                       inverse(rhs));
  }
  for (long i = 1; i < d; ++i)
    for (long j = 0; j < i; ++j)
      relators.push_back(commutator(Word::single((int)i), Word::single((int)j)));

  FamilySpec spec;
  spec.family = Family::KS;
  spec.params = {{"p", p}, {"s", s}};
  spec.presentation = Presentation(
      "K" + std::to_string(p) + "_" + std::to_string(s), std::move(names),
      std::move(relators));
  spec.h_claimed = d;
  spec.abelianization_claimed =
      AbelianGroup::from_cyclic_orders({mpz_class(ps), mpz_class(ps)});
  spec.schur_padic_rank_claimed = (p == 2 && s == 1) ? 0 : d / 2;
  return spec;
}

Presentation ks_quotient(long p, long s, long k) {
  if (k < 1) throw BadParams("coefficient quotient depth must be >= 1");
  FamilySpec spec = coclass_ks(p, s);
  const long pk = checked_pow(p, k, 1000000);
  Presentation base = *spec.presentation;
  std::vector<Word> relators = base.relators();
  const long d = (long)base.generator_count() - 1;
  for (long i = 0; i < d; ++i)
    relators.push_back(Word::single((int)i, (int)pk));
  return Presentation(base.name() + "_mod" + std::to_string(k),
                      base.generator_names(), std::move(relators));
}

Presentation free_abelian_presentation(long rank, const std::string& stem) {
  if (rank < 0) throw BadParams("rank must be nonnegative");
  std::vector<std::string> names;
  for (long i = 1; i <= rank; ++i) names.push_back(stem + std::to_string(i));
  std::vector<Word> relators;
  for (long i = 1; i < rank; ++i)
    for (long j = 0; j < i; ++j)
      relators.push_back(commutator(Word::single((int)i), Word::single((int)j)));
  return Presentation("Z" + std::to_string(rank), std::move(names),
                      std::move(relators));
}

FamilySpec bieberbach_b1(long n) {
  if (n < 2) throw BadParams("dimension must be at least 2");
  // a^2 = y, a x a^-1 = x^-1, [a,y] = [x,y] = 1
  Presentation b12("B1_2", {"a", "x", "y"},
                   {Word::single(0, 2) * Word::single(2, -1),
                    conjugate(Word::single(0), Word::single(1)) *
                        Word::single(1),
                    commutator(Word::single(0), Word::single(2)),
                    commutator(Word::single(1), Word::single(2))});
  FamilySpec spec;
  spec.family = Family::B1;
  spec.params = {{"n", n}};
  spec.h_claimed = n;  // lattice rank of Z^2 x Z^{n-2}
  if (n == 2) {
    spec.presentation = b12;
  } else {
    spec.presentation =
        direct_product(b12, free_abelian_presentation(n - 2, "z"));
  }
  // computed abelianization: Z x C2 plus the free block
  spec.abelianization_claimed = direct_sum(
      direct_sum(AbelianGroup::free(1), AbelianGroup::cyclic(2)),
      AbelianGroup::free(n - 2));
  return spec;
}

PredictedStructure predict(Family f,
                           const std::map<std::string, long>& params) {
  auto get = [&](const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw BadParams("missing parameter " + key);
    return it->second;
  };
  PredictedStructure out;
  switch (f) {
    case Family::KS: {
      long p = get("p"), s = get("s");
      if (!is_prime(p) || p == 2) throw BadParams("odd prime required");
      if (s < 1) throw BadParams("s must be at least 1");
      long ps = checked_pow(p, s, 1000000);
      long d = checked_pow(p, s - 1, 1000000) * (p - 1);
      if (s == 1) {
        // C_p x C_p x C_{p^2} x Z_p^{p-1} x Z_p^{(p-1)/2}
        out.torsion_as_written = {mpz_class(p), mpz_class(p),
                                  mpz_class(p * p)};
        out.padic_rank = (p - 1) + (p - 1) / 2;
        out.source = "eq-2.19";
      } else {
        // C_{p^s}^2 x C_{p^{2s}} x Z_p^{(3/2) d_s}
        out.torsion_as_written = {mpz_class(ps), mpz_class(ps),
                                  mpz_class(ps) * ps};
        out.padic_rank = 3 * d / 2;
        out.source = "thm-coclass";
      }
      out.padic_prime = p;
      return out;
    }
    case Family::B1: {
      long n = get("n");
      if (n < 2) throw BadParams("dimension must be at least 2");
      if (n == 2) {
        out.torsion_as_written = {2, 4};
        out.free_rank = 2;
        out.source = "eq-3.4";
      } else {
        for (long i = 0; i < 2 * n - 3; ++i)
          out.torsion_as_written.push_back(2);
        out.torsion_as_written.push_back(4);
        out.free_rank = (n - 1) * (n - 1) + 1;
        out.source = "eq-3.5";
      }
      return out;
    }
    case Family::FreeSolvable:
    case Family::FreeNilpotent: {
      long r = get("r");
      if (r < 1) throw BadParams("rank must be at least 1");
      out.f_bound = r * (r - 1) / 2;
      out.source = f == Family::FreeSolvable ? "cor-3.5" : "cor-3.6";
      return out;
    }
    case Family::GN:
      throw BadParams(
          "no closed-form tensor square is predicted for this family");
  }
  throw BadParams("unknown family");
}

}  // namespace tensq

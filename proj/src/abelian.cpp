#include "tensq/abelian.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tensq/errors.hpp"

namespace tensq {

namespace {

// Trial-division factorization; torsion orders in this toolkit are small
// (they come from finite groups of desk-scale order).
std::map<mpz_class, unsigned> factorize(mpz_class n) {
  std::map<mpz_class, unsigned> out;
  internal_check(n >= 1, "factorize: nonpositive input");
  for (mpz_class p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

}  // namespace

AbelianGroup AbelianGroup::from_cyclic_orders(std::vector<mpz_class> orders) {
  AbelianGroup g;
  // Primary decomposition: per prime, a descending list of exponents.
  std::map<mpz_class, std::vector<unsigned>> primary;
  for (const mpz_class& d : orders) {
    internal_check(d >= 0, "cyclic order must be nonnegative");
    if (d == 0) {
      ++g.rank_;
      continue;
    }
    if (d == 1) continue;
    for (const auto& [p, e] : factorize(d)) primary[p].push_back(e);
  }
  std::size_t count = 0;
  for (auto& [p, es] : primary) {
    std::sort(es.begin(), es.end(), std::greater<>());
    count = std::max(count, es.size());
  }
  // Invariant factor t steps from the top multiplies the t-th largest
  // exponent of every prime, giving the divisibility chain directly.
  std::vector<mpz_class> inv(count, 1);
  for (const auto& [p, es] : primary)
    for (std::size_t t = 0; t < es.size(); ++t) {
      mpz_class pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), es[t]);
      inv[count - 1 - t] *= pe;
    }
  g.torsion_ = std::move(inv);
  return g;
}

AbelianGroup AbelianGroup::free(std::size_t rank) {
  AbelianGroup g;
  g.rank_ = rank;
  return g;
}

AbelianGroup AbelianGroup::cyclic(const mpz_class& n) {
  return from_cyclic_orders({n});
}

std::vector<mpz_class> AbelianGroup::invariant_factors() const {
  std::vector<mpz_class> out = torsion_;
  out.insert(out.end(), rank_, mpz_class(0));
  return out;
}

std::string AbelianGroup::to_text() const {
  if (is_trivial()) return "1";
  std::ostringstream os;
  bool first = true;
  std::size_t i = 0;
  while (i < torsion_.size()) {
    std::size_t j = i;
    while (j < torsion_.size() && torsion_[j] == torsion_[i]) ++j;
    if (!first) os << " x ";
    first = false;
    os << "C" << torsion_[i].get_str();
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  if (rank_ > 0) {
    if (!first) os << " x ";
    os << "Z";
    if (rank_ > 1) os << "^" << rank_;
  }
  return os.str();
}

AbelianGroup abelian_from_matrix(const IntMatrix& m) {
  SmithDecomposition snf = smith_normal_form(m);
  std::vector<mpz_class> orders;
  const std::size_t nmin = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < nmin; ++i) orders.push_back(snf.s.at(i, i));
  // Columns beyond the diagonal are unconstrained copies of Z.
  for (std::size_t j = nmin; j < m.cols(); ++j) orders.push_back(0);
  return AbelianGroup::from_cyclic_orders(std::move(orders));
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<mpz_class> orders = a.invariant_factors();
  auto bo = b.invariant_factors();
  orders.insert(orders.end(), bo.begin(), bo.end());
  return AbelianGroup::from_cyclic_orders(std::move(orders));
}

AbelianGroup tensor_ab(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<mpz_class> orders;
  for (const mpz_class& d : a.invariant_factors())
    for (const mpz_class& e : b.invariant_factors()) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), e.get_mpz_t());
      orders.push_back(g);  // gcd(0, n) = n and gcd(0, 0) = 0, as required
    }
  return AbelianGroup::from_cyclic_orders(std::move(orders));
}

AbelianGroup gamma_whitehead(const AbelianGroup& a) {
  std::vector<mpz_class> factors = a.invariant_factors();
  std::vector<mpz_class> orders;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const mpz_class& d = factors[i];
    if (d == 0)
      orders.push_back(0);  // Gamma(Z) = Z
    else
      orders.push_back(d % 2 == 0 ? mpz_class(2 * d) : d);
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), factors[i].get_mpz_t(), factors[j].get_mpz_t());
      orders.push_back(g);
    }
  }
  return AbelianGroup::from_cyclic_orders(std::move(orders));
}

std::size_t hirsch(const AbelianGroup& a) { return a.rank(); }

std::optional<mpz_class> order_ab(const AbelianGroup& a) {
  if (a.rank() > 0) return std::nullopt;
  mpz_class n = 1;
  for (const mpz_class& d : a.torsion()) n *= d;
  return n;
}

bool has_two_torsion(const AbelianGroup& a) {
  for (const mpz_class& d : a.torsion())
    if (d % 2 == 0) return true;
  return false;
}

AbelianGroup abelian_type_from_element_orders(
    const std::vector<std::uint64_t>& orders) {
  const std::uint64_t n = orders.size();
  internal_check(n >= 1, "element order multiset is empty");
  if (n == 1) return AbelianGroup();

  std::vector<mpz_class> primary;
  for (const auto& [p, e] : factorize(mpz_class((unsigned long)n))) {
    (void)e;
    const std::uint64_t pu = p.get_ui();
    // count[k] = #{x : ord(x) divides p^k}; only p-power orders qualify.
    std::vector<std::uint64_t> count;
    count.push_back(1);  // the identity
    for (;;) {
      std::uint64_t pk = 1;  // p^k with k = count.size()
      for (std::size_t i = 0; i < count.size(); ++i) pk *= pu;
      std::uint64_t c = 0;
      for (std::uint64_t o : orders) {
        std::uint64_t v = o;
        while (v % pu == 0) v /= pu;
        if (v == 1 && o <= pk) ++c;
      }
      if (c == count.back()) break;
      count.push_back(c);
    }
    // log_p of the counts gives m_k = sum_i min(k, lambda_i); the deltas
    // are the conjugate partition of the exponent multiset.
    std::vector<unsigned> m;
    for (std::uint64_t c : count) {
      unsigned lg = 0;
      std::uint64_t v = c;
      while (v % pu == 0) {
        v /= pu;
        ++lg;
      }
      internal_check(v == 1, "p^k-torsion count is not a power of p");
      m.push_back(lg);
    }
    std::vector<unsigned> delta;
    for (std::size_t k = 1; k < m.size(); ++k) delta.push_back(m[k] - m[k - 1]);
    if (delta.empty()) continue;
    for (unsigned i = 1; i <= delta[0]; ++i) {
      unsigned lambda = 0;
      for (unsigned d : delta)
        if (d >= i) ++lambda;
      mpz_class pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), lambda);
      primary.push_back(pe);
    }
  }
  return AbelianGroup::from_cyclic_orders(std::move(primary));
}

}  // namespace tensq

#include "doctest.h"
#include "tensq/abelian.hpp"
#include "tensq/dsl.hpp"
#include "tensq/int_matrix.hpp"
#include "tensq/presentation.hpp"

using namespace tensq;

namespace {

IntMatrix make(std::size_t r, std::size_t c, std::vector<long> entries) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = entries[i * c + j];
  return m;
}

void check_snf(const IntMatrix& m) {
  SmithDecomposition d = smith_normal_form(m);
  CHECK(d.u * m * d.v == d.s);
  CHECK(abs(d.u.determinant()) == 1);
  CHECK(abs(d.v.determinant()) == 1);
  const std::size_t nmin = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < nmin; ++i) {
    CHECK(d.s.at(i, i) >= 0);
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (j != i) CHECK(d.s.at(i, j) == 0);
    if (i + 1 < nmin && d.s.at(i + 1, i + 1) != 0)
      CHECK(d.s.at(i + 1, i + 1) % (d.s.at(i, i) == 0 ? d.s.at(i + 1, i + 1)
                                                      : d.s.at(i, i)) == 0);
    if (d.s.at(i, i) == 0 && i + 1 < nmin) CHECK(d.s.at(i + 1, i + 1) == 0);
  }
}

// Independent oracle for the abelian tensor product: cokernel of the
// bilinearity relations on the |A| x |B| symbol lattice.
AbelianGroup tensor_oracle(const AbelianGroup& a, const AbelianGroup& b) {
  auto fa = a.invariant_factors();
  auto fb = b.invariant_factors();
  const std::size_t ra = fa.size(), rb = fb.size();
  const std::size_t J = ra * rb;
  // Relations: o_a(i) * (e_i (x) f_j) = 0 and o_b(j) * (e_i (x) f_j) = 0.
  std::vector<std::vector<mpz_class>> rows;
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < rb; ++j) {
      if (fa[i] != 0) {
        std::vector<mpz_class> r(J, 0);
        r[i * rb + j] = fa[i];
        rows.push_back(r);
      }
      if (fb[j] != 0) {
        std::vector<mpz_class> r(J, 0);
        r[i * rb + j] = fb[j];
        rows.push_back(r);
      }
    }
  IntMatrix m(rows.size(), J);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < J; ++j) m.at(i, j) = rows[i][j];
  return abelian_from_matrix(m);
}

}  // namespace

TEST_CASE("smith normal form of fixed matrices") {
  SUBCASE("coprime diagonal merges") {
    auto d = smith_normal_form(make(2, 2, {2, 0, 0, 3}));
    CHECK(d.s.at(0, 0) == 1);
    CHECK(d.s.at(1, 1) == 6);
  }
  SUBCASE("content and determinant fix the invariants") {
    auto d = smith_normal_form(make(2, 2, {2, 4, 6, 8}));
    CHECK(d.s.at(0, 0) == 2);
    CHECK(d.s.at(1, 1) == 4);
    check_snf(make(2, 2, {2, 4, 6, 8}));
  }
  SUBCASE("zero matrix stays zero") {
    auto d = smith_normal_form(make(2, 2, {0, 0, 0, 0}));
    CHECK(d.s.is_zero());
    CHECK(abelian_from_matrix(make(2, 2, {0, 0, 0, 0})) ==
          AbelianGroup::free(2));
  }
  SUBCASE("empty matrices are fine") {
    check_snf(IntMatrix(0, 3));
    check_snf(IntMatrix(3, 0));
    CHECK(abelian_from_matrix(IntMatrix(0, 2)) == AbelianGroup::free(2));
  }
}

TEST_CASE("randomized smith soundness") {
  std::uint64_t state = 0xda3e39cb94b95bdbull;
  auto next = [&]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 11;
  };
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t r = 1 + next() % 5, c = 1 + next() % 5;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        m.at(i, j) = (long)(next() % 101) - 50;
    check_snf(m);
  }
}

TEST_CASE("cokernels of relation matrices") {
  // order-6 symmetric group data: rows (2,0),(0,3),(2,2)
  CHECK(abelian_from_matrix(make(3, 2, {2, 0, 0, 3, 2, 2})) ==
        AbelianGroup::cyclic(2));

  Presentation g3 = parse_presentation(
      "group G3 { gens: a1, a2, t; rels: t^3, t^-1*a1*t*a2^-1, "
      "t^-1*a2*t*a2*a1, [a1,a2]; }");
  IntMatrix m = abelianized_relation_matrix(g3);
  CHECK(m.rows() == 4);
  CHECK(m.cols() == 3);
  CHECK(abelian_from_matrix(m) ==
        AbelianGroup::from_cyclic_orders({3, 3}));
}

TEST_CASE("abelianized relation matrix takes exponent sums") {
  Presentation p = parse_presentation(
      "group P { gens: a, b; rels: a^2, b^3, a*b*a*b; }");
  IntMatrix m = abelianized_relation_matrix(p);
  CHECK(m.at(0, 0) == 2);
  CHECK(m.at(0, 1) == 0);
  CHECK(m.at(1, 0) == 0);
  CHECK(m.at(1, 1) == 3);
  CHECK(m.at(2, 0) == 2);
  CHECK(m.at(2, 1) == 2);
}

TEST_CASE("abelian group normal form and rendering") {
  AbelianGroup g = AbelianGroup::from_cyclic_orders({4, 2, 0, 0, 0});
  CHECK(g.torsion() == std::vector<mpz_class>{2, 4});
  CHECK(g.rank() == 3);
  CHECK(g.to_text() == "C2 x C4 x Z^3");
  CHECK(AbelianGroup().to_text() == "1");
  // 1-factors vanish, non-chain inputs renormalize
  CHECK(AbelianGroup::from_cyclic_orders({6, 4}) ==
        AbelianGroup::from_cyclic_orders({2, 12}));
}

TEST_CASE("order, hirsch, two-torsion") {
  AbelianGroup g = AbelianGroup::from_cyclic_orders({2, 4, 0, 0});
  CHECK(hirsch(g) == 2);
  CHECK(!order_ab(g).has_value());
  CHECK(order_ab(AbelianGroup::from_cyclic_orders({2, 4})).value() == 8);
  CHECK(order_ab(AbelianGroup()).value() == 1);
  CHECK(hirsch(AbelianGroup::cyclic(6)) == 0);
  CHECK(has_two_torsion(AbelianGroup::cyclic(2)));
  CHECK(!has_two_torsion(AbelianGroup::from_cyclic_orders({3, 3})));
  CHECK(!has_two_torsion(AbelianGroup::from_cyclic_orders({9, 9})));
  CHECK(hirsch(AbelianGroup::free(4)) == 4);
}

TEST_CASE("tensor product of abelian groups matches the symbol oracle") {
  auto C = [](long n) { return AbelianGroup::cyclic(n); };
  CHECK(tensor_ab(C(6), C(4)) == C(2));
  CHECK(tensor_ab(C(3), C(3)) == C(3));
  CHECK(tensor_ab(C(3), C(3)) == tensor_oracle(C(3), C(3)));

  AbelianGroup zc2 = direct_sum(AbelianGroup::free(1), C(2));
  CHECK(tensor_ab(zc2, zc2) ==
        direct_sum(AbelianGroup::free(1),
                   AbelianGroup::from_cyclic_orders({2, 2, 2})));

  std::vector<AbelianGroup> pool = {
      C(2), C(3), C(4), C(9),
      AbelianGroup::from_cyclic_orders({2, 2}),
      AbelianGroup::from_cyclic_orders({3, 3}),
      AbelianGroup::from_cyclic_orders({2, 4}),
      direct_sum(AbelianGroup::free(1), C(3)),
      AbelianGroup::free(2)};
  for (const auto& a : pool)
    for (const auto& b : pool) {
      CHECK(tensor_ab(a, b) == tensor_oracle(a, b));
      CHECK(tensor_ab(a, b) == tensor_ab(b, a));
    }
  // distributivity over direct sums
  for (const auto& a : pool)
    for (const auto& b : pool)
      for (const auto& c : pool)
        CHECK(tensor_ab(a, direct_sum(b, c)) ==
              direct_sum(tensor_ab(a, b), tensor_ab(a, c)));
}

TEST_CASE("whitehead functor values and order arithmetic") {
  auto C = [](long n) { return AbelianGroup::cyclic(n); };
  CHECK(gamma_whitehead(C(2)) == C(4));
  CHECK(gamma_whitehead(C(3)) == C(3));
  CHECK(gamma_whitehead(AbelianGroup::free(2)) == AbelianGroup::free(3));
  CHECK(gamma_whitehead(AbelianGroup::from_cyclic_orders({3, 3})) ==
        AbelianGroup::from_cyclic_orders({3, 3, 3}));

  // |Gamma(A+B)| = |Gamma(A)| |Gamma(B)| |A (x) B| on finite inputs.
  std::vector<AbelianGroup> pool = {C(2), C(3), C(4),
                                    AbelianGroup::from_cyclic_orders({2, 2}),
                                    AbelianGroup::from_cyclic_orders({3, 9})};
  for (const auto& a : pool)
    for (const auto& b : pool) {
      mpz_class lhs = order_ab(gamma_whitehead(direct_sum(a, b))).value();
      mpz_class rhs = order_ab(gamma_whitehead(a)).value() *
                      order_ab(gamma_whitehead(b)).value() *
                      order_ab(tensor_ab(a, b)).value();
      CHECK(lhs == rhs);
    }
}

TEST_CASE("hirsch is additive over direct sums") {
  AbelianGroup a = direct_sum(AbelianGroup::free(2), AbelianGroup::cyclic(4));
  AbelianGroup b = direct_sum(AbelianGroup::free(1), AbelianGroup::cyclic(6));
  CHECK(hirsch(direct_sum(a, b)) == hirsch(a) + hirsch(b));
}

TEST_CASE("abelian type from element orders") {
  // C2 x C4: orders 1,2,2,2,4,4,4,4
  std::vector<std::uint64_t> orders = {1, 2, 2, 2, 4, 4, 4, 4};
  CHECK(abelian_type_from_element_orders(orders) ==
        AbelianGroup::from_cyclic_orders({2, 4}));
  std::vector<std::uint64_t> c6 = {1, 6, 3, 2, 3, 6};
  CHECK(abelian_type_from_element_orders(c6) == AbelianGroup::cyclic(6));
}

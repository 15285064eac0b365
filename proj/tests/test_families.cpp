#include "doctest.h"
#include "tensq/coset_table.hpp"
#include "tensq/dsl.hpp"
#include "tensq/errors.hpp"
#include "tensq/families.hpp"

using namespace tensq;

namespace {
const EnumerationBudget budget{200000, std::chrono::milliseconds(60000)};
}

TEST_CASE("crystallographic presentations match the published shape") {
  FamilySpec g2 = crystallographic_gn(2);
  CHECK(g2.presentation->generator_count() == 2);
  CHECK(g2.presentation->relators().size() == 2);
  CHECK(g2.h_claimed == 1);

  FamilySpec g3 = crystallographic_gn(3);
  CHECK(g3.presentation->generator_count() == 3);
  CHECK(g3.presentation->relators().size() == 4);
  CHECK(g3.h_claimed == 2);

  FamilySpec g5 = crystallographic_gn(5);
  CHECK(g5.h_claimed == 4);
  CHECK(g5.abelianization_claimed ==
        AbelianGroup::from_cyclic_orders({5, 5}));
}

TEST_CASE("abelianization of the holonomy-n family is C_n x C_n") {
  for (long n = 2; n <= 12; ++n) {
    FamilySpec spec = crystallographic_gn(n);
    AbelianGroup ab = abelian_from_matrix(
        abelianized_relation_matrix(*spec.presentation));
    CHECK(ab == AbelianGroup::from_cyclic_orders(
                    {mpz_class(n), mpz_class(n)}));
    CHECK(ab == spec.abelianization_claimed);
  }
}

TEST_CASE("derived subgroup description is free abelian of rank n-1") {
  for (long n : {2L, 3L, 6L}) {
    Presentation d = gn_derived_description(n);
    CHECK(d.generator_count() == (std::size_t)(n - 1));
    AbelianGroup ab =
        abelian_from_matrix(abelianized_relation_matrix(d));
    CHECK(ab == AbelianGroup::free(n - 1));
  }
}

TEST_CASE("congruence quotients have order n * m^(n-1)") {
  CHECK(group_order(gn_quotient(3, 2), budget) == 12);
  CHECK(group_order(gn_quotient(2, 5), budget) == 10);
  CHECK(group_order(gn_quotient(3, 3), budget) == 27);
  CHECK(group_order(gn_quotient(4, 2), budget) == 32);
}

TEST_CASE("the e-vector rule") {
  CHECK(e_vector(3, 2) == std::vector<int>{1, 0, 0, 1, 0, 0});
  CHECK(e_vector(3, 1) == std::vector<int>{1, 1});
  CHECK(e_vector(2, 1) == std::vector<int>{1});

  // for s > 1 the ones count p^{s-1}-spaced slots, p-1 of them
  for (auto [p, s] : {std::pair<long, long>{3, 2}, {5, 2}, {3, 3}}) {
    auto e = e_vector(p, s);
    long sum = 0;
    for (int x : e) sum += x;
    CHECK(sum == p - 1);
  }
}

TEST_CASE("coclass family presentations and quotient orders") {
  FamilySpec k32 = coclass_ks(3, 2);
  CHECK(k32.presentation->generator_count() == 7);
  CHECK(k32.h_claimed == 6);
  CHECK(*k32.schur_padic_rank_claimed == 3);
  CHECK(k32.abelianization_claimed ==
        AbelianGroup::from_cyclic_orders({9, 9}));

  FamilySpec k31 = coclass_ks(3, 1);
  CHECK(k31.presentation->generator_count() == 3);
  CHECK(k31.h_claimed == 2);

  FamilySpec k51 = coclass_ks(5, 1);
  CHECK(*k51.schur_padic_rank_claimed == 2);

  CHECK(group_order(ks_quotient(3, 1, 1), budget) == 27);
  CHECK(group_order(ks_quotient(3, 1, 2), budget) == 243);
  CHECK(group_order(ks_quotient(5, 1, 1), budget) == 3125);
  CHECK(group_order(ks_quotient(2, 1, 2), budget) == 8);

  CHECK_THROWS_AS(coclass_ks(4, 1), BadParams);
  CHECK_THROWS_AS(coclass_ks(2, 2), BadParams);
}

TEST_CASE("the p = 2 coclass group is the infinite dihedral presentation") {
  FamilySpec k2 = coclass_ks(2, 1);
  FamilySpec g2 = crystallographic_gn(2);
  // both are <a, t | t^2, t^-1 a t a> up to renaming
  CHECK(presentations_match(*k2.presentation, *g2.presentation, {1, 2}));
}

TEST_CASE("dimension-2 Bieberbach data") {
  FamilySpec b2 = bieberbach_b1(2);
  CHECK(b2.presentation->generator_count() == 3);
  CHECK(b2.presentation->relators().size() == 4);
  CHECK(b2.h_claimed == 2);
  // Klein-bottle abelianization: the relation matrix gives Z x C2
  AbelianGroup ab = abelian_from_matrix(
      abelianized_relation_matrix(*b2.presentation));
  CHECK(ab == direct_sum(AbelianGroup::free(1), AbelianGroup::cyclic(2)));

  FamilySpec b3 = bieberbach_b1(3);
  CHECK(b3.presentation->generator_count() == 4);
  CHECK(b3.h_claimed == 3);
  // product structure: B_1(n) = B_1(2) x Z^{n-2}
  Presentation expect =
      direct_product(*b2.presentation, free_abelian_presentation(1, "z"));
  CHECK(*b3.presentation == expect);
}

TEST_CASE("extension presentations reproduce the named groups") {
  // infinite dihedral: Q = C2, A = Z, action -1, no lift
  {
    ExtensionData e;
    e.q_presentation =
        parse_presentation("group C2 { gens: x; rels: x^2; }");
    e.free_rank = 1;
    IntMatrix m(1, 1);
    m.at(0, 0) = -1;
    e.action_words = semidirect_action_words({m}, 1, {});
    e.lifting_words = {Word()};
    Presentation d = extension_presentation(e);
    CHECK(d.generator_count() == 2);
    // gamma -> t^-1 (inverting renaming), alpha -> a1
    FamilySpec g2 = crystallographic_gn(2);
    CHECK(presentations_match(d, *g2.presentation, {1, -2}));
  }
  // holonomy 3: Q = C3, A = Z^2 with the companion action
  {
    ExtensionData e;
    e.q_presentation =
        parse_presentation("group C3 { gens: t; rels: t^3; }");
    e.free_rank = 2;
    e.action_words = semidirect_action_words({gn_action_matrix(3)}, 2, {});
    e.lifting_words = {Word()};
    Presentation d = extension_presentation(e);
    FamilySpec g3 = crystallographic_gn(3);
    CHECK(presentations_match(d, *g3.presentation, {1, 2, -3}));
  }
  // the dimension-2 Bieberbach group: x -> x^-1, y -> y, lift a^2 = y
  {
    ExtensionData e;
    e.q_presentation =
        parse_presentation("group C2 { gens: a; rels: a^2; }");
    e.free_rank = 2;
    IntMatrix m(2, 2);
    m.at(0, 0) = -1;
    m.at(1, 1) = 1;
    e.action_words = semidirect_action_words({m}, 2, {});
    e.lifting_words = {Word::single(1)};  // a^2 = y
    Presentation d = extension_presentation(e);
    FamilySpec b2 = bieberbach_b1(2);
    // alphas (x, y) then gamma (a) against (a, x, y)
    CHECK(presentations_match(d, *b2.presentation, {2, 3, 1}));
  }
}

TEST_CASE("action words read off matrix rows") {
  IntMatrix xi = gn_action_matrix(3);
  auto rows = semidirect_action_words({xi}, 2, {});
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].size() == 2);
  CHECK(rows[0][0] == Word::single(1));  // a2
  Word expect;
  expect.append(0, -1);
  expect.append(1, -1);
  CHECK(rows[0][1] == expect);  // a1^-1 a2^-1

  auto trivial = semidirect_action_words({IntMatrix::identity(2)}, 2, {});
  CHECK(trivial[0][0] == Word::single(0));
  CHECK(trivial[0][1] == Word::single(1));

  IntMatrix minus(1, 1);
  minus.at(0, 0) = -1;
  auto dinf = semidirect_action_words({minus}, 1, {});
  CHECK(dinf[0][0] == Word::single(0, -1));
}

TEST_CASE("malformed extension data is rejected") {
  ExtensionData e;
  e.q_presentation = parse_presentation("group C2 { gens: q; rels: q^2; }");
  e.free_rank = 1;
  e.action_words = {{Word::single(5)}};  // index out of range
  e.lifting_words = {Word()};
  CHECK_THROWS_AS(extension_presentation(e), BadParams);

  e.action_words = {{Word::single(0)}};
  e.lifting_words = {Word::single(3)};  // lift outside A
  CHECK_THROWS_AS(extension_presentation(e), BadParams);

  e.lifting_words = {};  // wrong arity
  CHECK_THROWS_AS(extension_presentation(e), BadParams);

  ExtensionData bad;
  bad.q_presentation = e.q_presentation;
  bad.torsion_orders = {4, 2};  // not ascending
  bad.action_words = {{Word::single(0), Word::single(1)}};
  bad.lifting_words = {Word()};
  CHECK_THROWS_AS(extension_presentation(bad), BadParams);
}

TEST_CASE("finite split extensions have order |A| |Q|") {
  // C4 acting on (Z/5)^2 by a matrix of multiplicative order 4
  ExtensionData e;
  e.q_presentation = parse_presentation("group C4 { gens: q; rels: q^4; }");
  e.free_rank = 0;
  e.torsion_orders = {5, 5};
  IntMatrix m(2, 2);
  m.at(0, 1) = 1;
  m.at(1, 0) = -1;  // rotation of order 4
  e.action_words = semidirect_action_words({m}, 0, {5, 5});
  e.lifting_words = {Word()};
  Presentation p = extension_presentation(e);
  CHECK(group_order(p, budget) == 100);
}

TEST_CASE("predicted structures evaluate the printed formulas") {
  PredictedStructure kp3 = predict(Family::KS, {{"p", 3}, {"s", 1}});
  CHECK(kp3.torsion_as_written ==
        std::vector<mpz_class>{3, 3, 9});
  CHECK(kp3.padic_rank == 3);
  CHECK(kp3.padic_prime == 3);

  PredictedStructure k32 = predict(Family::KS, {{"p", 3}, {"s", 2}});
  CHECK(k32.torsion_as_written ==
        std::vector<mpz_class>{9, 9, 81});
  CHECK(k32.padic_rank == 9);

  PredictedStructure b12 = predict(Family::B1, {{"n", 2}});
  CHECK(b12.torsion_as_written == std::vector<mpz_class>{2, 4});
  CHECK(b12.free_rank == 2);

  PredictedStructure b13 = predict(Family::B1, {{"n", 3}});
  CHECK(b13.torsion_as_written == std::vector<mpz_class>{2, 2, 2, 4});
  CHECK(b13.free_rank == 5);

  CHECK(*predict(Family::FreeSolvable, {{"r", 4}}).f_bound == 6);
  CHECK(*predict(Family::FreeNilpotent, {{"r", 1}}).f_bound == 0);
  CHECK_THROWS_AS(predict(Family::GN, {{"n", 3}}), BadParams);
}

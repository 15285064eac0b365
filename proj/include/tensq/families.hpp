#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tensq/abelian.hpp"
#include "tensq/int_matrix.hpp"
#include "tensq/presentation.hpp"

namespace tensq {

enum class Family { GN, KS, B1, FreeSolvable, FreeNilpotent };

// One of the article's group families with its claimed invariants.
struct FamilySpec {
  Family family = Family::GN;
  std::map<std::string, long> params;
  std::optional<Presentation> presentation;  // free families carry none
  long h_claimed = 0;
  AbelianGroup abelianization_claimed;
  // p-adic rank claimed for the Schur multiplier (coclass family only);
  // the p=2, s=1 exception sets it to 0.
  std::optional<long> schur_padic_rank_claimed;
};

// A closed-form tensor-square structure exactly as the article states it:
// torsion factors in written order (no normalization), a p-adic free rank,
// an integer free rank, or an f-bound for the free families.
struct PredictedStructure {
  std::vector<mpz_class> torsion_as_written;
  long padic_rank = 0;
  long padic_prime = 0;
  long free_rank = 0;
  std::optional<long> f_bound;
  std::string source;
};

// Extension data in the shape of the splitting lemma for A-by-Q groups
// with A finitely generated abelian and Q finite: torsion generators
// alpha_1..alpha_m (orders n_1 <= ... <= n_m) come first, then k free
// generators; u[i][j] rewrites gamma_i alpha_j gamma_i^-1, w_i lifts the
// i-th Q-relator into A.
struct ExtensionData {
  Presentation q_presentation;
  std::size_t free_rank = 0;
  std::vector<long> torsion_orders;
  std::vector<std::vector<Word>> action_words;
  std::vector<Word> lifting_words;
};

Presentation extension_presentation(const ExtensionData& e);

// u-words read off matrix rows: generator i of Q acts by mats[i], and
// u[i][j] = alpha_1^M[j,0] * ... * alpha_r^M[j,r-1].
std::vector<std::vector<Word>> semidirect_action_words(
    const std::vector<IntMatrix>& mats, std::size_t free_rank,
    const std::vector<long>& torsion_orders);

// Companion-style action matrix of the holonomy-n crystallographic family.
IntMatrix gn_action_matrix(long n);

FamilySpec crystallographic_gn(long n);
Presentation gn_derived_description(long n);
Presentation gn_quotient(long n, long m);

FamilySpec coclass_ks(long p, long s);
std::vector<int> e_vector(long p, long s);
Presentation ks_quotient(long p, long s, long k);

FamilySpec bieberbach_b1(long n);

Presentation free_abelian_presentation(long rank, const std::string& stem);

PredictedStructure predict(Family f, const std::map<std::string, long>& params);

}  // namespace tensq

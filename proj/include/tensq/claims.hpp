#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tensq/coset_table.hpp"
#include "tensq/presentation.hpp"

namespace tensq {

// Hirsch-length arithmetic.
long f_of(long h_g, long h_tensor);
long hirsch_additive(long h_sub, long h_quot);
bool check_j2_bound(long f_val, long h_j2);
bool check_schur_bound(long c, long h_s, long h_m);
// Least integer c >= 0 with f <= c*h; requires h > 0 when f > 0.
long least_linear_constant(long f_val, long h);

enum class ClaimMode { Exact, Symbolic, Quotient };

// MISMATCH is a first-class outcome: the registry records what the article
// asserts, and the verdict never overwrites it.
enum class Verdict { Consistent, QuotientConsistent, Mismatch, BudgetBlown };

std::string mode_name(ClaimMode m);
ClaimMode mode_from_name(const std::string& s);
std::string verdict_name(Verdict v);

struct PartOutcome {
  ClaimMode mode = ClaimMode::Symbolic;
  Verdict verdict = Verdict::Consistent;
  std::string expected;
  std::string computed;
  std::vector<std::string> details;
  std::string error;  // nonempty when the checker itself failed
};

struct ClaimReport {
  std::string id;
  std::string statement;
  std::string locator;
  Verdict verdict = Verdict::Consistent;
  std::string expected;
  std::string computed;
  std::vector<PartOutcome> parts;
  std::string error;
};

struct Claim {
  std::string id;
  std::string statement;
  std::string locator;  // equation/lemma tag plus a short quote
  std::vector<std::pair<ClaimMode,
                        std::function<PartOutcome(const EnumerationBudget&)>>>
      parts;
  // Registry-supplied budget for expensive quotient computations; an
  // explicitly set user budget wins over it.
  std::optional<EnumerationBudget> budget_override;
};

const std::vector<Claim>& claim_registry();

struct ClaimRunOptions {
  std::vector<std::string> only;  // empty = every claim
  std::optional<ClaimMode> mode;  // nullopt = all modes
  EnumerationBudget budget;
  bool budget_overridden = false;
  unsigned max_parallel = 2;
};

// Executes the selected claims (concurrently, report order fixed by id).
// A claim whose checker throws BudgetExceeded reports BUDGET-EXCEEDED and
// never aborts the batch.
std::vector<ClaimReport> run_claims(const ClaimRunOptions& opt);

// |G (x) G| = p^d |G| |M(G)| with d = sum (n-i) e_i for finite groups whose
// abelianization is a nontrivial odd-p-group; both sides are computed
// independently.  Throws HypothesisNotMet when the abelianization is not
// an odd-prime-power torsion group.
struct OrderFormulaResult {
  long p = 0;
  long d = 0;
  std::uint64_t group_order = 0;
  std::uint64_t schur_order = 0;
  std::uint64_t tensor_order = 0;
  mpz_class rhs;
  bool consistent = false;
  std::string details;
};
OrderFormulaResult check_order_formula(const Presentation& p,
                                       const EnumerationBudget& budget);

}  // namespace tensq

#include "tensq/claims.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "tensq/abelian.hpp"
#include "tensq/dsl.hpp"
#include "tensq/errors.hpp"
#include "tensq/families.hpp"
#include "tensq/group_hom.hpp"
#include "tensq/tensor_square.hpp"

namespace tensq {

long f_of(long h_g, long h_tensor) {
  if (h_g < 0 || h_tensor < 0) throw BadParams("negative Hirsch length");
  return h_tensor - h_g;
}

long hirsch_additive(long h_sub, long h_quot) {
  if (h_sub < 0 || h_quot < 0) throw BadParams("negative Hirsch length");
  return h_sub + h_quot;
}

bool check_j2_bound(long f_val, long h_j2) { return f_val <= h_j2; }

bool check_schur_bound(long c, long h_s, long h_m) {
  if (c < 0) throw BadParams("the linearity constant must be nonnegative");
  return h_m <= h_s * h_s + (c + 1) * h_s;
}

long least_linear_constant(long f_val, long h) {
  if (f_val <= 0) return 0;
  if (h <= 0) throw BadParams("no linearity constant exists for h = 0, f > 0");
  return (f_val + h - 1) / h;
}

std::string mode_name(ClaimMode m) {
  switch (m) {
    case ClaimMode::Exact: return "exact";
    case ClaimMode::Symbolic: return "symbolic";
    case ClaimMode::Quotient: return "quotient";
  }
  return "?";
}

ClaimMode mode_from_name(const std::string& s) {
  if (s == "exact") return ClaimMode::Exact;
  if (s == "symbolic") return ClaimMode::Symbolic;
  if (s == "quotient") return ClaimMode::Quotient;
  throw BadParams("unknown mode: " + s);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "CONSISTENT";
    case Verdict::QuotientConsistent: return "QUOTIENT-CONSISTENT";
    case Verdict::Mismatch: return "MISMATCH";
    case Verdict::BudgetBlown: return "BUDGET-EXCEEDED";
  }
  return "?";
}

namespace {

// Tensor squares are shared between claims (C06 and C16 probe the same
// quotients); successful results are memoized by printed presentation.
std::shared_ptr<const TensorSquareData> cached_tensor(
    const Presentation& p, const EnumerationBudget& b) {
  using Shared = std::shared_ptr<const TensorSquareData>;
  static std::mutex mu;
  static std::map<std::string, std::shared_future<Shared>> cache;

  const std::string key = print_presentation(p);
  std::promise<Shared> prom;
  std::shared_future<Shared> fut;
  bool owner = false;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) {
      fut = prom.get_future().share();
      cache.emplace(key, fut);
      owner = true;
    } else {
      fut = it->second;
    }
  }
  if (owner) {
    try {
      prom.set_value(
          std::make_shared<const TensorSquareData>(tensor_square_nu(p, b)));
    } catch (...) {
      prom.set_exception(std::current_exception());
      std::lock_guard<std::mutex> lock(mu);
      cache.erase(key);  // budget retries with a larger allowance recompute
    }
  }
  return fut.get();
}

long ppart_exponent(std::uint64_t n, long p) {
  long e = 0;
  while (n % (std::uint64_t)p == 0) {
    n /= (std::uint64_t)p;
    ++e;
  }
  return e;
}

std::string num(std::uint64_t v) { return std::to_string(v); }

Presentation b1_quotient(long n, long m) {
  Presentation b = *bieberbach_b1(n).presentation;
  std::vector<Word> rel = b.relators();
  // kill the lattice: x, y and the extra free generators get order m
  for (std::size_t g = 1; g < b.generator_count(); ++g)
    rel.push_back(Word::single((int)g, (int)m));
  return Presentation(b.name() + "_mod" + std::to_string(m),
                      b.generator_names(), std::move(rel));
}


const char* kCorpus[][2] = {
    {"C2", "group C2 { gens: a; rels: a^2; }"},
    {"C3", "group C3 { gens: a; rels: a^3; }"},
    {"C4", "group C4 { gens: a; rels: a^4; }"},
    {"V4", "group V4 { gens: a, b; rels: a^2, b^2, [a,b]; }"},
    {"C6", "group C6 { gens: a; rels: a^6; }"},
    {"S3", "group S3 { gens: a, b; rels: a^2, b^3, (a*b)^2; }"},
    {"D8", "group D8 { gens: r, s; rels: r^4, s^2, (r*s)^2; }"},
    {"Q8", "group Q8 { gens: a, b; rels: a^4, a^2*b^-2, b^-1*a*b*a; }"},
    {"C3xC3", "group C3xC3 { gens: a, b; rels: a^3, b^3, [a,b]; }"},
    {"A4",
     "group A4 { gens: a1, a2, t; rels: t^3, t^-1*a1*t*a2^-1, "
     "t^-1*a2*t*a2*a1, [a1,a2], a1^2, a2^2; }"},
};

PartOutcome symbolic_outcome(bool ok, std::string expected,
                             std::string computed,
                             std::vector<std::string> details) {
  PartOutcome o;
  o.mode = ClaimMode::Symbolic;
  o.verdict = ok ? Verdict::Consistent : Verdict::Mismatch;
  o.expected = std::move(expected);
  o.computed = std::move(computed);
  o.details = std::move(details);
  return o;
}

// Quotient evidence for the G_n Hirsch lists: the m-part exponent of
// |G_n(m) (x) G_n(m)| at coprime moduli tracks the torsion-free rank of
// the tensor square; equality across moduli is the checkable property.
PartOutcome gn_quotient_evidence(long n, const std::vector<long>& moduli,
                                 long paper_h_tensor,
                                 const EnumerationBudget& b) {
  PartOutcome o;
  o.mode = ClaimMode::Quotient;
  o.expected = "equal m-part exponents across moduli (published rank " +
               std::to_string(paper_h_tensor) + ")";
  std::vector<long> exps;
  for (long m : moduli) {
    auto t = cached_tensor(gn_quotient(n, m), b);
    long e = ppart_exponent(t->tensor_order, m);
    exps.push_back(e);
    std::ostringstream os;
    os << "mod " << m << ": |T| = " << t->tensor_order << ", " << m
       << "-part exponent " << e << " (published h(G_" << n << " (x) G_" << n
       << ") = " << paper_h_tensor << ")";
    o.details.push_back(os.str());
  }
  std::ostringstream oc;
  for (std::size_t i = 0; i < exps.size(); ++i)
    oc << (i ? ", " : "") << "e(" << moduli[i] << ") = " << exps[i];
  o.computed = oc.str();
  if (moduli.size() >= 2) {
    bool equal = std::adjacent_find(exps.begin(), exps.end(),
                                    std::not_equal_to<>()) == exps.end();
    o.verdict = equal ? Verdict::QuotientConsistent : Verdict::Mismatch;
  } else {
    // single coprime modulus: reported evidence, juxtaposed with the
    // published rank, with no cross-checkable property to gate on
    o.expected = "m-part exponent juxtaposed with the published rank " +
                 std::to_string(paper_h_tensor);
    o.verdict = Verdict::QuotientConsistent;
  }
  return o;
}

// Symbolic chain shared by the coclass and crystallographic rank claims:
// h(tensor) = h(derived) + h(J2), h(J2) = h(M) since the Whitehead part is
// periodic, so f = h(M).
PartOutcome linear_growth_chain(const std::string& label, long h_group,
                                long h_derived, long h_schur,
                                long expected_f,
                                std::vector<std::string> inputs) {
  long h_j2 = hirsch_additive(0, h_schur);
  long h_tensor = hirsch_additive(h_derived, h_j2);
  long f = f_of(h_group, h_tensor);
  std::vector<std::string> details = std::move(inputs);
  {
    std::ostringstream os;
    os << label << ": h(tensor) = " << h_derived << " + " << h_j2 << " = "
       << h_tensor << ", f = " << h_tensor << " - " << h_group << " = " << f;
    details.push_back(os.str());
  }
  return symbolic_outcome(f == expected_f, std::to_string(expected_f),
                          std::to_string(f), std::move(details));
}

Claim make_claim(
    std::string id, std::string statement, std::string locator,
    std::vector<std::pair<ClaimMode, std::function<PartOutcome(
                                         const EnumerationBudget&)>>>
        parts,
    std::optional<EnumerationBudget> budget_override = std::nullopt) {
  Claim c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.locator = std::move(locator);
  c.parts = std::move(parts);
  c.budget_override = budget_override;
  return c;
}

std::vector<Claim> build_registry() {
  std::vector<Claim> reg;


  // ---- C01..C04: the published rank lists for G_2, G_3, G_5, G_7. ----
  struct GnRow {
    const char* id;
    long n;
    long h_tensor;
    std::vector<long> moduli;
    const char* quote;
  };
  // The holonomy-5 evidence stays at the modulus-2 quotient and the
  // holonomy-7 row is symbolic only: their other nu-groups run past the
  // desk budget (millions of cosets with wide tables).
  const std::vector<GnRow> rows = {
      {"C01", 2, 1, {3, 5}, "h(G_2 (x) G_2)=h(G_2)=1"},
      {"C02", 3, 3, {5, 7}, "h(G_3 (x) G_3)-h(G_3)=3-2=1"},
      {"C03", 5, 6, {2}, "h(G_5 (x) G_5)-h(G_5)=6-4=2"},
      {"C04", 7, 9, {}, "h(G_7 (x) G_7)-h(G_7)=9-6=3"},
  };
  for (const GnRow& row : rows) {
    long n = row.n;
    long ht = row.h_tensor;
    bool quotient_probes = !row.moduli.empty();
    auto sym = [n, ht, quotient_probes](const EnumerationBudget&) {
      long h = n - 1;  // family value h(G_n) = n - 1
      long f = f_of(h, ht);
      std::ostringstream os;
      os << "h(G_" << n << ") = " << h << " (lattice rank), published h of "
         << "the tensor square = " << ht;
      std::vector<std::string> det{os.str()};
      if (!quotient_probes)
        det.push_back(
            "quotient probes for this row exceed the desk budget; the "
            "enumerable rows carry the finite evidence");
      return symbolic_outcome(f == ht - h, std::to_string(ht - h),
                              std::to_string(f), std::move(det));
    };
    std::vector<std::pair<ClaimMode, std::function<PartOutcome(
                                         const EnumerationBudget&)>>>
        parts{{ClaimMode::Symbolic, sym}};
    if (!row.moduli.empty()) {
      auto quo = [n, ht, moduli = row.moduli](const EnumerationBudget& b) {
        return gn_quotient_evidence(n, moduli, ht, b);
      };
      parts.emplace_back(ClaimMode::Quotient, quo);
    }
    reg.push_back(make_claim(
        row.id,
        "published torsion-free ranks for the holonomy-" +
            std::to_string(n) + " crystallographic group",
        std::string("sec. 2, eq. (2.10)-(2.11): \"") + row.quote + "\"",
        std::move(parts)));
  }

  // ---- C05: f(h(K_p)) = (p-1)/2. ----
  reg.push_back(make_claim(
      "C05", "linear growth f(h(K_p)) = (p-1)/2 for p in {3, 5, 7}",
      "prop. 2.8: \"f(h(K_p))=1/2(p-1)\"",
      {{ClaimMode::Symbolic, [](const EnumerationBudget&) {
          PartOutcome agg;
          agg.mode = ClaimMode::Symbolic;
          agg.verdict = Verdict::Consistent;
          for (long p : {3L, 5L, 7L}) {
            PartOutcome o = linear_growth_chain(
                "K_" + std::to_string(p), p - 1, p - 1, (p - 1) / 2,
                (p - 1) / 2,
                {"inputs: h(K_s) = d_s; [K_s, K_s] of p-adic rank d_s; "
                 "M(K_s) of p-adic rank d_s/2 (lemma 2.2)"});
            if (o.verdict != Verdict::Consistent) agg.verdict = o.verdict;
            for (auto& d : o.details) agg.details.push_back(d);
            agg.expected += (agg.expected.empty() ? "" : "; ") + o.expected;
            agg.computed += (agg.computed.empty() ? "" : "; ") + o.computed;
          }
          return agg;
        }}}));

  // ---- C06: the closed-form K_p tensor square, torsion part disputed. ----
  reg.push_back(make_claim(
      "C06",
      "closed-form tensor square of K_p (p = 3): torsion part",
      "eq. (2.19): \"K_p(x)K_p=C_p x C_p x C_{p^2} x Z_p^{p-1} x "
      "Z_p^{(p-1)/2}\"",
      {{ClaimMode::Symbolic,
        [](const EnumerationBudget&) {
          AbelianGroup published = AbelianGroup::from_cyclic_orders({3, 3, 9});
          AbelianGroup rule =
              abelian_tensor_shortcut(AbelianGroup::from_cyclic_orders({3, 3}))
                  .nabla;
          PartOutcome o;
          o.mode = ClaimMode::Symbolic;
          o.expected = "torsion " + published.to_text() + " (order 81)";
          o.computed = "torsion " + rule.to_text() + " (order " +
                       order_ab(rule)->get_str() + ") by the gcd rule";
          o.verdict = published == rule ? Verdict::Consistent : Verdict::Mismatch;
          o.details.push_back(
              "the claimed torsion rests on C_p (x)_Z C_p = C_{p^2}; the "
              "bilinear tensor square of C_p x C_p has exponent p, see C14");
          return o;
        }},
       {ClaimMode::Quotient, [](const EnumerationBudget& b) {
          auto t = cached_tensor(ks_quotient(3, 1, 1), b);
          PartOutcome o;
          o.mode = ClaimMode::Quotient;
          o.expected =
              "mod-3 image of the predicted structure: 81 * 3^3 = 2187";
          o.computed = "|T(K_3 mod 3)| = " + num(t->tensor_order) +
                       ", nabla = " + t->nabla.to_text() +
                       ", M = " + t->schur.to_text();
          std::uint64_t gcd_variant = 27 * 27;  // gcd-rule torsion * 3^rank
          o.details.push_back("gcd-rule variant predicts 27 * 3^3 = " +
                              num(gcd_variant) + " for the same quotient");
          o.verdict = t->tensor_order == 2187 ? Verdict::QuotientConsistent
                                              : Verdict::Mismatch;
          return o;
        }}}));

  // ---- C07: the coclass theorem at (p, s) = (3, 2). ----
  reg.push_back(make_claim(
      "C07", "coclass tensor square theorem at (p, s) = (3, 2)",
      "thm. 2.9: \"K_s (x) K_s=C^2_{p^s} x C_{p^{2s}} x Z^{(3/2)d_s}_p\"",
      {{ClaimMode::Symbolic,
        [](const EnumerationBudget&) {
          // rank bookkeeping of the claimed structure
          long d = 6;  // d_s = 3^(2-1) * (3-1)
          return linear_growth_chain(
              "K_{3,2}", d, d, d / 2, d / 2,
              {"inputs: theorem structure has p-adic rank (3/2) d_s; "
               "h(K_s) = d_s; M(K_s) of rank d_s/2 (lemma 2.2)",
               "torsion factor C_{p^{2s}} depends on the disputed "
               "C_p (x) C_p value, recorded under C14"});
        }},
       {ClaimMode::Quotient, [](const EnumerationBudget& b) {
          PartOutcome o;
          o.mode = ClaimMode::Quotient;
          Presentation q = ks_quotient(3, 2, 1);
          std::uint64_t order = group_order(q, b);
          auto e = e_vector(3, 2);
          std::string evec;
          for (int x : e) evec += std::to_string(x);
          bool order_ok = order == 6561;  // 3^(2 + 1*6)
          bool evec_ok = evec == "100100";
          o.expected = "|K_{3,2} mod 3| = 3^8 = 6561; e-vector 100100";
          o.computed = "order " + num(order) + "; e-vector " + evec;
          o.verdict = order_ok && evec_ok ? Verdict::QuotientConsistent
                                          : Verdict::Mismatch;
          return o;
        }}}));

  // ---- C08: conditional G_p chain. ----
  reg.push_back(make_claim(
      "C08",
      "assuming the stated Schur multiplier of G_p, f(h(G_p)) = (p-1)/2",
      "cor. 2.10: \"Assume M(G_p)=Z^{(p-1)/2}\"",
      {{ClaimMode::Symbolic, [](const EnumerationBudget&) {
          PartOutcome agg;
          agg.mode = ClaimMode::Symbolic;
          agg.verdict = Verdict::Consistent;
          for (long p : {3L, 5L, 7L}) {
            PartOutcome o = linear_growth_chain(
                "G_" + std::to_string(p), p - 1, p - 1, (p - 1) / 2,
                (p - 1) / 2,
                {"inputs: h(G_p) = p-1; derived subgroup free abelian of "
                 "rank p-1; M(G_p) of rank (p-1)/2 by assumption"});
            if (o.verdict != Verdict::Consistent) agg.verdict = o.verdict;
            for (auto& d : o.details) agg.details.push_back(d);
          }
          agg.expected = "f = (p-1)/2 for p in {3,5,7}";
          agg.computed = agg.verdict == Verdict::Consistent
                             ? "chain reproduces (p-1)/2 for all three"
                             : "chain disagrees";
          return agg;
        }}}));

  // ---- C09: f <= h(J2) everywhere. ----
  reg.push_back(make_claim(
      "C09", "the J2 bound f(h(S)) <= h(J2(S)) across all instances",
      "cor. 2.5: \"f(h(S)) <= h(J_2(S))\"",
      {{ClaimMode::Exact,
        [](const EnumerationBudget& b) {
          PartOutcome o;
          o.mode = ClaimMode::Exact;
          o.verdict = Verdict::Consistent;
          for (const auto& row : kCorpus) {
            auto t = cached_tensor(parse_presentation(row[1]), b);
            // finite groups: f = 0 and h(J2) = 0
            if (!check_j2_bound(0, 0)) o.verdict = Verdict::Mismatch;
            o.details.push_back(std::string(row[0]) + ": f = 0 <= h(J2) = 0" +
                                " (|J2| = " + num(t->j2_order) + ")");
          }
          o.expected = "f <= h(J2) on the finite corpus";
          o.computed = "0 <= 0 for all ten groups";
          return o;
        }},
       {ClaimMode::Symbolic, [](const EnumerationBudget&) {
          bool ok = true;
          std::vector<std::string> det;
          for (long p : {3L, 5L, 7L}) {
            long f = (p - 1) / 2, hj2 = (p - 1) / 2;
            ok = ok && check_j2_bound(f, hj2);
            det.push_back("K_" + std::to_string(p) + ": f = " +
                          std::to_string(f) + " <= h(J2) = " +
                          std::to_string(hj2) + " (equality)");
          }
          ok = ok && check_j2_bound(3, 3);
          det.push_back("K_{3,2}: f = 3 <= h(J2) = 3 (equality)");
          ok = ok && !check_j2_bound(2, 1);
          det.push_back("checker sanity: f = 2 against h(J2) = 1 fails");
          return symbolic_outcome(ok, "bound holds with equality",
                                  ok ? "holds" : "violated", det);
        }}}));

  // ---- C10: the Schur bound. ----
  reg.push_back(make_claim(
      "C10", "the Schur bound h(M(S)) <= h(S)^2 + (c+1) h(S)",
      "cor. 2.11: \"h(M(S)) <= h(S)^2+(c+1)h(S)\"",
      {{ClaimMode::Symbolic, [](const EnumerationBudget&) {
          std::vector<std::string> det;
          bool ok = true;
          {
            long c = least_linear_constant(1, 2);
            ok = ok && check_schur_bound(c, 2, 1);
            det.push_back("K_3: c = " + std::to_string(c) +
                          ", bound 4 + " + std::to_string(c + 1) +
                          "*2 >= h(M) = 1");
          }
          ok = ok && check_schur_bound(0, 0, 0);
          det.push_back("finite groups: h = 0 forces h(M) = 0, equality");
          for (long f : {4L, 2L}) {
            long c = least_linear_constant(f, 3);
            ok = ok && check_schur_bound(c, 3, 1);
            det.push_back("B_1(3) with f-reading " + std::to_string(f) +
                          ": c = " + std::to_string(c) +
                          ", bound 9 + " + std::to_string(3 * (c + 1)) +
                          " >= h(M) = 1");
          }
          return symbolic_outcome(ok, "bound holds on all instances",
                                  ok ? "holds" : "violated", det);
        }}}));

  // ---- C11: the order formula. ----
  reg.push_back(make_claim(
      "C11", "|G (x) G| = p^d |G| |M(G)| on the odd-p corpus",
      "thm. 2.13(a): \"|G(x)G|=p^d|G||M(G)|\", remark 2.14: \"true for an "
      "arbitrary finite group\"",
      {{ClaimMode::Exact, [](const EnumerationBudget& b) {
          PartOutcome o;
          o.mode = ClaimMode::Exact;
          o.verdict = Verdict::Consistent;
          const std::pair<const char*, Presentation> groups[] = {
              {"C3xC3",
               parse_presentation("group C3xC3 { gens: a, b; rels: a^3, "
                                  "b^3, [a,b]; }")},
              {"C3xC9",
               parse_presentation("group C3xC9 { gens: a, b; rels: a^3, "
                                  "b^9, [a,b]; }")},
              {"Heis27",
               parse_presentation("group H27 { gens: x, y, z; rels: x^3, "
                                  "y^3, z^3, [x,y]*z^-1, [x,z], [y,z]; }")},
              {"K3mod3", ks_quotient(3, 1, 1)},
          };
          for (const auto& [name, pres] : groups) {
            OrderFormulaResult r = check_order_formula(pres, b);
            if (!r.consistent) o.verdict = Verdict::Mismatch;
            o.details.push_back(std::string(name) + ": " + r.details);
          }
          o.expected = "equality on all four groups";
          o.computed = o.verdict == Verdict::Consistent
                           ? "equality holds on all four"
                           : "a group violates the formula";
          return o;
        }}}));

  // ---- C12: B_1(2) f constant to zero. ----
  reg.push_back(make_claim(
      "C12", "f vanishes on the dimension-2 Bieberbach group",
      "cor. 3.2: \"B_1(2)(x)B_1(2) = C_2 x C_4 x Z^2\" and \"f is constant "
      "to 0\"",
      {{ClaimMode::Symbolic,
        [](const EnumerationBudget&) {
          long f = f_of(2, 2);
          return symbolic_outcome(
              f == 0, "0", std::to_string(f),
              {"inputs: published tensor square has rank 2; h(B_1(2)) = 2 "
               "(lattice rank)"});
        }},
       {ClaimMode::Quotient, [](const EnumerationBudget& b) {
          PartOutcome o;
          o.mode = ClaimMode::Quotient;
          std::vector<long> exps;
          for (long m : {3L, 5L}) {
            auto t = cached_tensor(b1_quotient(2, m), b);
            long e = ppart_exponent(t->tensor_order, m);
            long two = ppart_exponent(t->tensor_order, 2);
            exps.push_back(e);
            std::ostringstream os;
            os << "mod " << m << ": |T| = " << t->tensor_order << ", " << m
               << "-part exponent " << e << ", 2-part order " << (1L << two)
               << " (published torsion C_2 x C_4 has order 8)";
            o.details.push_back(os.str());
          }
          bool equal = exps.size() == 2 && exps[0] == exps[1];
          o.expected = "equal m-part exponents at both moduli (rank 2)";
          o.computed = "e(3) = " + std::to_string(exps[0]) +
                       ", e(5) = " + std::to_string(exps[1]);
          o.verdict = equal ? Verdict::QuotientConsistent : Verdict::Mismatch;
          return o;
        }}}));

  // ---- C13: the B_1(n) f-value: published vs recomputed. ----
  reg.push_back(make_claim(
      "C13", "f(h(B_1(n))) for n > 2: published value vs recomputation",
      "cor. 3.3: \"f(h(B_1(n)))=n^2-3n+4\"; recomputed from cor. 4.1 "
      "structure and h(B_1(n)) = n",
      {{ClaimMode::Symbolic, [](const EnumerationBudget&) {
          PartOutcome o;
          o.mode = ClaimMode::Symbolic;
          long n = 3;
          long published = n * n - 3 * n + 4;
          long recomputed = f_of(n, (n - 1) * (n - 1) + 1);
          o.expected = std::to_string(published) + " (published, n = 3)";
          o.computed = std::to_string(recomputed) +
                       " (rank (n-1)^2+1 minus lattice rank n)";
          o.verdict =
              published == recomputed ? Verdict::Consistent : Verdict::Mismatch;
          o.details.push_back(
              "the published proof subtracts n-2 where h(B_1(n)) = n is "
              "the dimension; (n-1)^2+1-(n-2) = n^2-3n+4 reproduces the "
              "published value");
          for (long k : {4L, 5L}) {
            std::ostringstream os;
            os << "n = " << k << ": published " << k * k - 3 * k + 4
               << ", recomputed " << f_of(k, (k - 1) * (k - 1) + 1);
            o.details.push_back(os.str());
          }
          return o;
        }}}));

  // ---- C14: the Whitehead value of C_3 x C_3. ----
  reg.push_back(make_claim(
      "C14", "Gamma(C_p x C_p) at p = 3: published value vs functor rules",
      "eq. (2.12): \"Gamma(K_p^{ab})=Gamma(C_p x C_p)=C_p x C_p x C_{p^2}\"",
      {{ClaimMode::Symbolic,
        [](const EnumerationBudget&) {
          AbelianGroup published = AbelianGroup::from_cyclic_orders({3, 3, 9});
          AbelianGroup rule =
              gamma_whitehead(AbelianGroup::from_cyclic_orders({3, 3}));
          PartOutcome o;
          o.mode = ClaimMode::Symbolic;
          o.expected = published.to_text() + " (published)";
          o.computed = rule.to_text() + " (functor rule table)";
          o.verdict = published == rule ? Verdict::Consistent : Verdict::Mismatch;
          o.details.push_back(
              "published step uses C_p (x)_Z C_p = C_{p^2}; the bilinear "
              "rule gives C_gcd = C_p");
          return o;
        }},
       {ClaimMode::Exact, [](const EnumerationBudget& b) {
          auto t = cached_tensor(
              parse_presentation(
                  "group C3xC3 { gens: a, b; rels: a^3, b^3, [a,b]; }"),
              b);
          PartOutcome o;
          o.mode = ClaimMode::Exact;
          // the published value needs an element of order 9 in the square
          bool has_nine = false;
          for (const mpz_class& d : t->j2.torsion())
            if (d % 9 == 0) has_nine = true;
          o.expected = "an order-9 cyclic factor inside the tensor square";
          o.computed = "tensor square " + t->j2.to_text() +
                       "; nabla = " + t->nabla.to_text();
          o.verdict = has_nine ? Verdict::Consistent : Verdict::Mismatch;
          o.details.push_back(
              "the computed tensor square of C_3 x C_3 has exponent 3, so "
              "no C_9 factor can occur in nabla");
          return o;
        }}}));

  // ---- C15: free solvable / free nilpotent bounds. ----
  reg.push_back(make_claim(
      "C15", "f-bounds for free solvable and free nilpotent groups",
      "cor. 3.5/3.6: \"f(h(G)) <= 1/2 r(r-1)\"",
      {{ClaimMode::Symbolic, [](const EnumerationBudget&) {
          bool ok = true;
          std::vector<std::string> det;
          for (long r = 1; r <= 6; ++r) {
            long bound = *predict(Family::FreeSolvable, {{"r", r}}).f_bound;
            long equality_case = r * (r + 1) / 2 - r;
            ok = ok && bound == r * (r - 1) / 2 && equality_case == bound;
            det.push_back("r = " + std::to_string(r) + ": 1/2 r(r+1) - r = " +
                          std::to_string(equality_case) + " = bound " +
                          std::to_string(bound));
          }
          det.push_back(
              "note: the nilpotent corollary prints the equality value as "
              "1/2 r(r+1); the chain gives 1/2 r(r-1)");
          det.push_back(
              "note: the printed proofs derive an upper bound from "
              "h(G) <= r, which only yields f >= 1/2 r(r-1); equality at "
              "h(G) = r is what the chain supports");
          return symbolic_outcome(ok, "1/2 r(r-1)",
                                  ok ? "reproduced for r = 1..6" : "differs",
                                  det);
        }}}));

  // ---- C16: the Schur multiplier of the coclass family via quotients. ----
  reg.push_back(make_claim(
      "C16", "Schur multipliers of coclass-family quotients are p-groups",
      "lemma 2.2: \"M(K_s) ~ Z^{d_s/2}_p, unless p=2 and s=1 in which case "
      "M(K_s)=1\"",
      {{ClaimMode::Quotient, [](const EnumerationBudget& b) {
          PartOutcome o;
          o.mode = ClaimMode::Quotient;
          o.verdict = Verdict::QuotientConsistent;
          struct Probe {
            long p, s, k;
          };
          for (Probe pr : {Probe{3, 1, 1}, Probe{2, 1, 2}, Probe{2, 1, 3}}) {
            auto t = cached_tensor(ks_quotient(pr.p, pr.s, pr.k), b);
            std::uint64_t so = t->schur_order;
            while (so % (std::uint64_t)pr.p == 0) so /= (std::uint64_t)pr.p;
            if (so != 1) o.verdict = Verdict::Mismatch;
            std::ostringstream os;
            os << "K_" << pr.p << " (s=" << pr.s << ") mod " << pr.p << "^"
               << pr.k << ": M = " << t->schur.to_text()
               << " (pro-p claim: rank " << (pr.p == 2 ? 0 : (pr.p - 1) / 2)
               << " over the p-adics"
               << (pr.p == 2 ? ", exception M = 1" : "") << ")";
            o.details.push_back(os.str());
          }
          o.expected = "p-group Schur multipliers on every finite quotient";
          o.computed = o.verdict == Verdict::QuotientConsistent
                           ? "all computed multipliers are p-groups"
                           : "a multiplier has foreign torsion";
          o.details.push_back(
              "finite quotients can only bound the pro-p multiplier from "
              "one side; ranks are juxtaposed, not compared");
          return o;
        }}}));

  // ---- C17: f(h(K_s)) = h(M(K_s)). ----
  reg.push_back(make_claim(
      "C17", "f(h(K_s)) = h(M(K_s)) = d_s/2 for s > 1",
      "cor. 2.12: \"f(h(G))=h(M(G))=1/2 p^{s-1}(p-1)\"",
      {{ClaimMode::Symbolic, [](const EnumerationBudget&) {
          bool ok = true;
          std::vector<std::string> det;
          struct Row {
            long p, s;
          };
          for (Row r : {Row{3, 2}, Row{5, 2}, Row{3, 3}}) {
            long d = 1;
            for (long i = 0; i < r.s - 1; ++i) d *= r.p;
            d *= (r.p - 1);
            long f = f_of(d, 3 * d / 2);
            ok = ok && f == d / 2;
            det.push_back("(p,s) = (" + std::to_string(r.p) + "," +
                          std::to_string(r.s) + "): f = " + std::to_string(f) +
                          " = d_s/2 = " + std::to_string(d / 2));
          }
          return symbolic_outcome(ok, "f = d_s/2 = h(M)",
                                  ok ? "chain reproduces d_s/2" : "differs",
                                  det);
        }}}));

  // ---- C18: theorem (b), f = h(M) for periodic abelianization. ----
  reg.push_back(make_claim(
      "C18", "f(h(G)) = h(M(G)) whenever G^{ab} is periodic",
      "thm. 2.13(b): \"f(h(G))=h(M(G))\"",
      {{ClaimMode::Symbolic, [](const EnumerationBudget&) {
          bool ok = true;
          std::vector<std::string> det;
          // re-derivation: f = h(M) + h([G,G]) - h(G) and
          // h(G) - h([G,G]) = h(G^{ab}) = 0 for periodic abelianization
          for (long p : {3L, 5L, 7L}) {
            long f = (p - 1) / 2 + (p - 1) - (p - 1);
            ok = ok && f == (p - 1) / 2;
            det.push_back("K_" + std::to_string(p) +
                          ": f = h(M) + h([G,G]) - h(G) = " +
                          std::to_string(f) + " = h(M)");
          }
          {
            long d = 6;
            long f = d / 2 + d - d;
            ok = ok && f == d / 2;
            det.push_back("K_{3,2}: f = " + std::to_string(f) + " = h(M)");
          }
          det.push_back(
              "G_p under the cor. 2.10 assumption gives the same chain");
          det.push_back(
              "inputs: hirsch additivity, h(Gamma(G^{ab})) = 0 for finite "
              "G^{ab}, the stated multiplier ranks");
          return symbolic_outcome(ok, "f = h(M) on every family instance",
                                  ok ? "chain closes" : "chain differs", det);
        }}}));

  return reg;
}

}  // namespace

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> reg = build_registry();
  return reg;
}

OrderFormulaResult check_order_formula(const Presentation& pres,
                                       const EnumerationBudget& budget) {
  OrderFormulaResult r;
  AbelianGroup ab = abelian_from_matrix(abelianized_relation_matrix(pres));
  if (ab.rank() > 0 || ab.is_trivial())
    throw HypothesisNotMet(
        "abelianization must be a nontrivial finite p-group");
  // all invariant factors must be powers of one odd prime
  mpz_class p = 0;
  std::vector<long> exps;
  for (const mpz_class& d : ab.torsion()) {
    mpz_class v = d;
    mpz_class q = 2;
    while (v % q != 0) q += 1;
    if (p == 0) p = q;
    if (q != p) throw HypothesisNotMet("abelianization is not a p-group");
    long e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (v != 1) throw HypothesisNotMet("abelianization is not a p-group");
    exps.push_back(e);
  }
  if (p == 2) throw HypothesisNotMet("the odd-prime hypothesis fails");

  r.p = (long)p.get_si();
  const long n = (long)exps.size();
  for (long i = 1; i <= n; ++i) r.d += (n - i) * exps[i - 1];

  TensorSquareData t = tensor_square_nu(pres, budget);
  r.group_order = t.stats.group_order;
  r.schur_order = t.schur_order;
  r.tensor_order = t.tensor_order;
  mpz_class pd;
  mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), (unsigned long)r.d);
  r.rhs = pd * (unsigned long)r.group_order * (unsigned long)r.schur_order;
  r.consistent = mpz_class((unsigned long)r.tensor_order) == r.rhs;

  std::ostringstream os;
  os << "|T| = " << r.tensor_order << " vs p^d |G| |M| = " << p.get_str()
     << "^" << r.d << " * " << r.group_order << " * " << r.schur_order
     << " = " << r.rhs.get_str() << (r.consistent ? " (equal)" : " (DIFFER)");
  r.details = os.str();
  return r;
}

namespace {

ClaimReport aggregate(const Claim& c, std::vector<PartOutcome> parts) {
  ClaimReport rep;
  rep.id = c.id;
  rep.statement = c.statement;
  rep.locator = c.locator;
  rep.parts = std::move(parts);

  bool any_mismatch = false, any_budget = false, any_strong = false;
  for (const PartOutcome& p : rep.parts) {
    if (!p.error.empty() && rep.error.empty()) rep.error = p.error;
    if (p.verdict == Verdict::Mismatch) any_mismatch = true;
    if (p.verdict == Verdict::BudgetBlown) any_budget = true;
    if (p.verdict == Verdict::Consistent &&
        (p.mode == ClaimMode::Exact || p.mode == ClaimMode::Symbolic))
      any_strong = true;
  }
  if (any_mismatch)
    rep.verdict = Verdict::Mismatch;
  else if (any_budget)
    rep.verdict = Verdict::BudgetBlown;
  else if (any_strong)
    rep.verdict = Verdict::Consistent;
  else
    rep.verdict = Verdict::QuotientConsistent;

  for (const PartOutcome& p : rep.parts) {
    if (rep.verdict == Verdict::Mismatch && p.verdict != Verdict::Mismatch)
      continue;
    if (!p.expected.empty() && rep.expected.empty()) rep.expected = p.expected;
    if (!p.computed.empty() && rep.computed.empty()) rep.computed = p.computed;
  }
  return rep;
}

}  // namespace

std::vector<ClaimReport> run_claims(const ClaimRunOptions& opt) {
  const std::vector<Claim>& reg = claim_registry();
  std::vector<const Claim*> selected;
  for (const Claim& c : reg) {
    if (!opt.only.empty() &&
        std::find(opt.only.begin(), opt.only.end(), c.id) == opt.only.end())
      continue;
    bool has_mode = false;
    for (const auto& [m, fn] : c.parts)
      if (!opt.mode.has_value() || *opt.mode == m) has_mode = true;
    if (has_mode) selected.push_back(&c);
  }

  std::vector<ClaimReport> out(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= selected.size()) return;
      const Claim& c = *selected[i];
      EnumerationBudget eb = opt.budget;
      if (!opt.budget_overridden && c.budget_override)
        eb = *c.budget_override;
      std::vector<PartOutcome> parts;
      for (const auto& [m, fn] : c.parts) {
        if (opt.mode.has_value() && *opt.mode != m) continue;
        try {
          parts.push_back(fn(eb));
        } catch (const BudgetExceeded& e) {
          PartOutcome p;
          p.mode = m;
          p.verdict = Verdict::BudgetBlown;
          p.computed = std::string("budget exceeded: ") + e.what();
          parts.push_back(p);
        } catch (const std::exception& e) {
          PartOutcome p;
          p.mode = m;
          p.error = e.what();
          parts.push_back(p);
        }
      }
      out[i] = aggregate(c, std::move(parts));
    }
  };
  unsigned nw = std::max(1u, std::min<unsigned>(opt.max_parallel,
                                                (unsigned)selected.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < nw; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace tensq

// Acceptance suite: one line per criterion, PASS/FAIL with timing, exit
// nonzero if anything fails.  Criteria with external behaviour (byte-stable
// reports) drive the installed CLI binary.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "tensq/claims.hpp"
#include "tensq/dsl.hpp"
#include "tensq/errors.hpp"
#include "tensq/families.hpp"
#include "tensq/group_hom.hpp"
#include "tensq/json_out.hpp"
#include "tensq/tensor_square.hpp"

#ifndef TENSQ_CLI
#define TENSQ_CLI "tensq"
#endif

namespace {

using namespace tensq;
using Clock = std::chrono::steady_clock;

int failures = 0;

struct Criterion {
  int number;
  std::string title;
  Clock::time_point start = Clock::now();

  void finish(bool pass, double limit_seconds, const std::string& note = "") {
    double secs =
        std::chrono::duration<double>(Clock::now() - start).count();
    bool in_time = limit_seconds <= 0 || secs <= limit_seconds;
    bool ok = pass && in_time;
    if (!ok) ++failures;
    std::printf("criterion %2d: %s  %s (%.2fs%s)%s%s\n", number,
                ok ? "PASS" : "FAIL", title.c_str(), secs,
                limit_seconds > 0
                    ? (" / limit " + std::to_string((int)limit_seconds) + "s")
                          .c_str()
                    : "",
                note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
  }
};

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 11;
  }
  long range(long lo, long hi) { return lo + (long)(next() % (hi - lo + 1)); }
};

const EnumerationBudget kBudget{2'000'000, std::chrono::milliseconds(300000)};

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

bool exactness_holds(const TensorSquareData& d) {
  return d.tensor_order == d.nabla_order * d.exterior_order &&
         d.exterior_order == d.schur_order * d.derived_order &&
         d.tensor_order == d.j2_order * d.derived_order;
}

// ---- criterion 1: randomized Smith soundness ----
void criterion_1() {
  Criterion c{1, "SNF soundness on 1000 random matrices up to 6x6"};
  Rng rng(0x7a1f00d5u);
  bool ok = true;
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    std::size_t r = 1 + rng.next() % 6, cl = 1 + rng.next() % 6;
    IntMatrix m(r, cl);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < cl; ++j) m.at(i, j) = rng.range(-50, 50);
    SmithDecomposition d = smith_normal_form(m);
    if (!(d.u * m * d.v == d.s)) ok = false;
    if (abs(d.u.determinant()) != 1 || abs(d.v.determinant()) != 1) ok = false;
    const std::size_t nmin = std::min(r, cl);
    for (std::size_t i = 0; i < nmin && ok; ++i) {
      if (d.s.at(i, i) < 0) ok = false;
      for (std::size_t j = 0; j < cl; ++j)
        if (j != i && d.s.at(i, j) != 0) ok = false;
      if (i + 1 < nmin) {
        const mpz_class &a = d.s.at(i, i), &b = d.s.at(i + 1, i + 1);
        if (a == 0 && b != 0) ok = false;
        if (a != 0 && b % a != 0) ok = false;
      }
    }
  }
  c.finish(ok, 5);
}

// ---- criteria 2, 3, 4: the tensor corpus ----
std::vector<std::pair<std::string, TensorSquareData>> corpus_nu;

void criterion_2() {
  Criterion c{2, "dual-method tensor oracle on the ten-group corpus"};
  bool ok = true;
  std::string note;
  for (const auto& row : kCorpus) {
    Presentation p = parse_presentation(row[1]);
    TensorSquareData nu = tensor_square_nu(p, kBudget);
    TensorSquareData df =
        tensor_square_definitional(mul_table_from_presentation(p, kBudget),
                                   kBudget);
    bool same = nu.tensor_order == df.tensor_order && nu.nabla == df.nabla &&
                nu.schur == df.schur && nu.j2 == df.j2;
    if (!same) {
      ok = false;
      note += std::string(row[0]) + " disagrees; ";
    }
    corpus_nu.emplace_back(row[0], std::move(nu));
  }
  c.finish(ok, 60, note);
}

void criterion_3() {
  Criterion c{3, "abelian corpus members obey the bilinear tensor law"};
  bool ok = true;
  const char* abelian[] = {"C2", "C3", "C4", "V4", "C6", "C3xC3"};
  for (const auto& [name, d] : corpus_nu) {
    bool is_ab = false;
    for (const char* a : abelian)
      if (name == a) is_ab = true;
    if (!is_ab) continue;
    AbelianTensorData s = abelian_tensor_shortcut(d.g_ab);
    if (order_ab(s.tensor).value() != (long)d.tensor_order) ok = false;
    if (d.j2 != s.tensor) ok = false;  // kappa is trivial, J2 is everything
    if (d.nabla != s.nabla) ok = false;
    if (name == std::string("C3xC3") && d.tensor_order != 81) ok = false;
  }
  c.finish(ok, 0);
}

void criterion_4() {
  Criterion c{4, "exactness arithmetic on every computed instance"};
  bool ok = true;
  for (const auto& [name, d] : corpus_nu)
    if (!exactness_holds(d)) ok = false;
  c.finish(ok, 0);
}

// ---- criterion 5: the order formula ----
void criterion_5() {
  Criterion c{5, "|G(x)G| = p^d |G| |M(G)| on the odd-p corpus"};
  bool ok = true;
  std::string note;
  const std::pair<const char*, Presentation> groups[] = {
      {"C3xC3",
       parse_presentation("group A { gens: a, b; rels: a^3, b^3, [a,b]; }")},
      {"C3xC9",
       parse_presentation("group B { gens: a, b; rels: a^3, b^9, [a,b]; }")},
      {"Heis27",
       parse_presentation("group H { gens: x, y, z; rels: x^3, y^3, z^3, "
                          "[x,y]*z^-1, [x,z], [y,z]; }")},
      {"K3mod3", ks_quotient(3, 1, 1)},
  };
  for (const auto& [name, pres] : groups) {
    OrderFormulaResult r = check_order_formula(pres, kBudget);
    if (!r.consistent) {
      ok = false;
      note += std::string(name) + ": " + r.details + "; ";
    }
  }
  c.finish(ok, 120, note);
}

// ---- criterion 6: splitting-lemma extensions ----
long matpow_order_ok(const IntMatrix& m, long q, long mod) {
  // is m^q = I over Z/mod with m invertible?
  auto mul = [&](const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < a.cols(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j) {
          c.at(i, j) += a.at(i, k) * b.at(k, j);
          c.at(i, j) %= mod;
        }
    return c;
  };
  IntMatrix acc = IntMatrix::identity(m.rows());
  for (long i = 0; i < q; ++i) acc = mul(acc, m);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_class want = i == j ? 1 : 0;
      mpz_class got = acc.at(i, j) % mod;
      if (got < 0) got += mod;
      if (got != want) return false;
    }
  return true;
}

void criterion_6() {
  Criterion c{6, "splitting-lemma validation: 20 random + 3 named instances"};
  bool ok = true;
  std::string note;
  Rng rng(0xbead5eed);
  int built = 0;
  int attempts = 0;
  while (built < 20 && attempts < 4000) {
    ++attempts;
    long q = std::vector<long>{2, 3, 4}[rng.next() % 3];
    long k = rng.range(1, 3);
    long m = rng.range(2, 5);
    IntMatrix act((std::size_t)k, (std::size_t)k);
    for (long i = 0; i < k; ++i)
      for (long j = 0; j < k; ++j) act.at(i, j) = rng.range(-2, 2);
    if (!matpow_order_ok(act, q, m)) continue;
    ExtensionData e;
    e.q_presentation = Presentation(
        "Q", {"q"}, {Word::single(0, (int)q)});
    e.free_rank = 0;
    e.torsion_orders.assign(k, m);
    e.action_words = semidirect_action_words({act}, 0, e.torsion_orders);
    e.lifting_words = {Word()};
    Presentation p = extension_presentation(e);
    std::uint64_t want = (std::uint64_t)q;
    for (long i = 0; i < k; ++i) want *= (std::uint64_t)m;
    std::uint64_t got = group_order(p, kBudget);
    if (got != want) {
      ok = false;
      note += "order " + std::to_string(got) + " != " + std::to_string(want) +
              "; ";
    }
    ++built;
  }
  if (built < 20) {
    ok = false;
    note += "only built " + std::to_string(built) + " instances; ";
  }

  // the three named instances, verbatim after renaming
  {
    ExtensionData e;
    e.q_presentation = parse_presentation("group C2 { gens: x; rels: x^2; }");
    e.free_rank = 1;
    IntMatrix m1(1, 1);
    m1.at(0, 0) = -1;
    e.action_words = semidirect_action_words({m1}, 1, {});
    e.lifting_words = {Word()};
    if (!presentations_match(extension_presentation(e),
                             *crystallographic_gn(2).presentation, {1, -2})) {
      ok = false;
      note += "dihedral instance differs; ";
    }
  }
  {
    ExtensionData e;
    e.q_presentation = parse_presentation("group C3 { gens: t; rels: t^3; }");
    e.free_rank = 2;
    e.action_words = semidirect_action_words({gn_action_matrix(3)}, 2, {});
    e.lifting_words = {Word()};
    if (!presentations_match(extension_presentation(e),
                             *crystallographic_gn(3).presentation,
                             {1, 2, -3})) {
      ok = false;
      note += "holonomy-3 instance differs; ";
    }
  }
  {
    ExtensionData e;
    e.q_presentation = parse_presentation("group C2 { gens: a; rels: a^2; }");
    e.free_rank = 2;
    IntMatrix m2(2, 2);
    m2.at(0, 0) = -1;
    m2.at(1, 1) = 1;
    e.action_words = semidirect_action_words({m2}, 2, {});
    e.lifting_words = {Word::single(1)};
    if (!presentations_match(extension_presentation(e),
                             *bieberbach_b1(2).presentation, {2, 3, 1})) {
      ok = false;
      note += "Bieberbach instance differs; ";
    }
  }
  c.finish(ok, 0, note);
}

// ---- criterion 7: family sanity ----
void criterion_7() {
  Criterion c{7, "family sanity: abelianizations, e-vector, product shape"};
  bool ok = true;
  for (long n = 2; n <= 12; ++n) {
    FamilySpec spec = crystallographic_gn(n);
    AbelianGroup ab =
        abelian_from_matrix(abelianized_relation_matrix(*spec.presentation));
    if (ab != AbelianGroup::from_cyclic_orders({mpz_class(n), mpz_class(n)}))
      ok = false;
  }
  if (e_vector(3, 2) != std::vector<int>{1, 0, 0, 1, 0, 0}) ok = false;
  for (long n = 3; n <= 6; ++n) {
    Presentation expect = direct_product(
        *bieberbach_b1(2).presentation,
        free_abelian_presentation(n - 2, "z"));
    if (*(bieberbach_b1(n).presentation) != expect) ok = false;
  }
  c.finish(ok, 0);
}

// ---- criterion 8: the claims ledger ----
void criterion_8() {
  Criterion c{8, "claims ledger: required verdicts under default budgets"};
  ClaimRunOptions opt;
  opt.budget = EnumerationBudget{2'000'000, std::chrono::milliseconds(120000)};
  auto reports = run_claims(opt);
  bool ok = reports.size() == 18;
  std::string note;
  auto verdict_of = [&](const std::string& id) -> Verdict {
    for (const auto& r : reports)
      if (r.id == id) return r.verdict;
    ok = false;
    return Verdict::BudgetBlown;
  };
  for (const char* id :
       {"C01", "C02", "C03", "C04", "C05", "C09", "C11", "C17", "C18"})
    if (verdict_of(id) != Verdict::Consistent) {
      ok = false;
      note += std::string(id) + " not CONSISTENT; ";
    }
  for (const char* id : {"C13", "C14"}) {
    if (verdict_of(id) != Verdict::Mismatch) {
      ok = false;
      note += std::string(id) + " not MISMATCH; ";
    }
    for (const auto& r : reports)
      if (r.id == id && (r.expected.empty() || r.computed.empty())) {
        ok = false;
        note += std::string(id) + " missing expected/computed; ";
      }
  }
  for (const auto& r : reports)
    if (!r.error.empty()) {
      ok = false;
      note += r.id + " crashed; ";
    }
  c.finish(ok, 600, note);
}

// ---- criterion 9: quotient rank evidence ----
void criterion_9() {
  Criterion c{9, "equal m-part exponents for the holonomy-3 quotients"};
  bool ok = true;
  std::string note;
  std::vector<long> exps;
  for (long m : {5L, 7L}) {
    TensorSquareData d = tensor_square_nu(gn_quotient(3, m), kBudget);
    std::uint64_t t = d.tensor_order;
    long e = 0;
    while (t % (std::uint64_t)m == 0) {
      t /= (std::uint64_t)m;
      ++e;
    }
    exps.push_back(e);
    note += "mod " + std::to_string(m) + ": exponent " + std::to_string(e) +
            "; ";
  }
  if (exps.size() != 2 || exps[0] != exps[1]) ok = false;
  note += "published h(G_3 (x) G_3) = 3";
  c.finish(ok, 300, note);
}

// ---- criterion 10: byte-identical reports across runs ----
int run_cli(const std::string& args, const std::string& outfile) {
  std::string cmd = std::string(TENSQ_CLI) + " " + args + " > " + outfile +
                    " 2>/dev/null";
  return std::system(cmd.c_str());
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void criterion_10() {
  Criterion c{10, "byte-identical JSON reports across consecutive runs"};
  bool ok = true;
  std::string note;
  // full claims run, twice, through the real binary
  for (int round = 0; round < 2; ++round) {
    if (run_cli("--format json claims run",
                "/tmp/tensq_acc_claims" + std::to_string(round) + ".json") !=
        0) {
      ok = false;
      note += "claims run failed; ";
    }
  }
  if (slurp("/tmp/tensq_acc_claims0.json") !=
      slurp("/tmp/tensq_acc_claims1.json")) {
    ok = false;
    note += "claims reports differ; ";
  }
  // a tensor report on a corpus member, twice
  {
    std::ofstream f("/tmp/tensq_acc_s3.grp");
    f << "group S3 { gens: a, b; rels: a^2, b^3, (a*b)^2; }\n";
  }
  for (int round = 0; round < 2; ++round) {
    if (run_cli("--format json tensor /tmp/tensq_acc_s3.grp --method both",
                "/tmp/tensq_acc_t" + std::to_string(round) + ".json") != 0) {
      ok = false;
      note += "tensor run failed; ";
    }
  }
  if (slurp("/tmp/tensq_acc_t0.json") != slurp("/tmp/tensq_acc_t1.json")) {
    ok = false;
    note += "tensor reports differ; ";
  }
  c.finish(ok, 0, note);
}

}  // namespace

int main() {
  try {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
  } catch (const std::exception& e) {
    std::printf("acceptance suite aborted: %s\n", e.what());
    return 1;
  }
  std::printf("%s\n", failures == 0 ? "acceptance: all criteria PASS"
                                    : "acceptance: FAILURES present");
  return failures == 0 ? 0 : 1;
}

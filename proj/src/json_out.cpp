#include "tensq/json_out.hpp"

#include <sstream>

#include "tensq/errors.hpp"

namespace tensq {

namespace {

std::int64_t small_int(const mpz_class& v) {
  if (!v.fits_slong_p())
    throw Error("value too large for a JSON number: " + v.get_str());
  return v.get_si();
}

}  // namespace

ojson json_of(const AbelianGroup& a) {
  ojson torsion = ojson::array();
  for (const mpz_class& d : a.torsion()) torsion.push_back(small_int(d));
  return ojson{{"torsion", torsion}, {"rank", a.rank()}};
}

ojson json_of(const TensorSquareData& d, const DiagramReport& r,
              const std::string& group_name) {
  ojson checks = ojson::array();
  for (const DiagramCheck& c : r.checks)
    checks.push_back(ojson{{"name", c.name},
                           {"status", c.pass ? "PASS" : "FAIL"},
                           {"details", c.details}});
  return ojson{
      {"group", group_name},
      {"method", d.method == TensorMethod::Nu ? "nu" : "definitional"},
      {"tensor_order", d.tensor_order},
      {"nabla", json_of(d.nabla)},
      {"exterior_order", d.exterior_order},
      {"schur", json_of(d.schur)},
      {"j2", json_of(d.j2)},
      {"derived_order", d.derived_order},
      {"group_order", d.stats.group_order},
      {"group_abelianization", json_of(d.g_ab)},
      {"nabla_text", d.nabla.to_text()},
      {"schur_text", d.schur.to_text()},
      {"j2_text", d.j2.to_text()},
      {"stats",
       ojson{{"action_degree", d.stats.action_degree},
             {"cosets_defined", d.stats.cosets_defined}}},
      {"checks", checks},
  };
}

ojson json_of(const ClaimReport& r) {
  ojson parts = ojson::array();
  for (const PartOutcome& p : r.parts) {
    ojson jp{{"mode", mode_name(p.mode)},
             {"verdict", p.error.empty() ? verdict_name(p.verdict) : "ERROR"},
             {"expected", p.expected},
             {"computed", p.computed},
             {"details", p.details}};
    if (!p.error.empty()) jp["error"] = p.error;
    parts.push_back(jp);
  }
  ojson out{{"id", r.id},
            {"statement", r.statement},
            {"locator", r.locator},
            {"verdict", r.error.empty() ? verdict_name(r.verdict) : "ERROR"},
            {"expected", r.expected},
            {"computed", r.computed},
            {"parts", parts}};
  if (!r.error.empty()) out["error"] = r.error;
  return out;
}

ojson json_of(const PredictedStructure& p) {
  ojson torsion = ojson::array();
  for (const mpz_class& d : p.torsion_as_written)
    torsion.push_back(small_int(d));
  ojson out{{"torsion_as_written", torsion},
            {"free_rank", p.free_rank},
            {"source", p.source}};
  if (p.padic_prime != 0) {
    out["padic_prime"] = p.padic_prime;
    out["padic_rank"] = p.padic_rank;
  }
  if (p.f_bound) out["f_bound"] = *p.f_bound;
  return out;
}

std::string render_text(const ClaimReport& r) {
  std::ostringstream os;
  os << r.id << " "
     << (r.error.empty() ? verdict_name(r.verdict) : "ERROR") << "  "
     << r.statement << "\n";
  os << "    locator: " << r.locator << "\n";
  if (!r.expected.empty()) os << "    expected: " << r.expected << "\n";
  if (!r.computed.empty()) os << "    computed: " << r.computed << "\n";
  for (const PartOutcome& p : r.parts) {
    os << "    [" << mode_name(p.mode) << "] "
       << (p.error.empty() ? verdict_name(p.verdict) : "ERROR") << "\n";
    for (const std::string& d : p.details) os << "      - " << d << "\n";
    if (!p.error.empty()) os << "      ! " << p.error << "\n";
  }
  return os.str();
}

}  // namespace tensq

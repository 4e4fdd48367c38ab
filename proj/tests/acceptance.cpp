// Runs every acceptance criterion in-process and prints one PASS/FAIL line each.

#include <cstdio>
#include <string>
#include <vector>

#include "cayley/errors.hpp"
#include "cayley/suites.hpp"

using namespace cayley;

namespace {

struct Run {
  std::string suite;
  int samples = 1000;
  /// Checks that must be present; matched on the part after "<suite>.n<level>.".
  std::vector<std::string> required;
};

struct Criterion {
  int id;
  std::string title;
  std::vector<Run> runs;
};

std::string check_key(const std::string& name) {
  const auto first = name.find('.');
  const auto second = name.find('.', first + 1);
  return second == std::string::npos ? name : name.substr(second + 1);
}

bool evaluate(const Criterion& c, std::string& detail) {
  bool ok = true;
  for (const Run& run : c.runs) {
    SuiteConfig config;
    config.suite = run.suite;
    config.samples = run.samples;
    config.parallel = true;
    const VerificationReport report = run_suite(config);
    for (const auto& check : report.checks) {
      if (!check.pass) {
        ok = false;
        detail += " failed:" + check.name;
      }
    }
    for (const auto& key : run.required) {
      bool found = false;
      double worst = 0.0;
      std::string exact;
      for (const auto& check : report.checks) {
        if (check_key(check.name) != key) continue;
        if (check.relation == Relation::Equal) {
          exact += (exact.empty() ? "=" : "/") + std::to_string(static_cast<long long>(check.value));
        }
        // Worst value over levels: smallest for lower bounds, largest otherwise.
        const bool lower = check.relation == Relation::Greater || check.relation == Relation::GreaterEqual;
        if (!found || (lower ? check.value < worst : check.value > worst)) worst = check.value;
        found = true;
      }
      if (!found) {
        ok = false;
        detail += " missing:" + run.suite + "." + key;
        continue;
      }
      char buf[64];
      std::snprintf(buf, sizeof buf, "=%.3g", worst);
      detail += " " + key + (exact.empty() ? std::string(buf) : exact);
    }
    detail += " " + run.suite + "[" + std::to_string(run.samples) + " samples, " +
              std::to_string(report.checks.size()) + " checks]";
  }
  return ok;
}

bool determinism(std::string& detail) {
  SuiteConfig config;
  config.suite = "all";
  const std::string first = format_json(run_suite(config));
  const std::string second = format_json(run_suite(config));
  config.parallel = true;
  const std::string parallel = format_json(run_suite(config));
  detail = " all[" + std::to_string(first.size()) + " bytes] rerun " + (first == second ? "identical" : "differs") +
           ", parallel " + (first == parallel ? "identical" : "differs");
  return first == second && first == parallel;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "symmetry algebra dimensions",
       {{"dims", 1000, {"derivation_dim", "structure_dim", "structure_complex_real_dim"}}}},
      {2, "centralizer dimensions and fixed lower plane",
       {{"centralizers", 1000, {"centralizer_dim", "flows_fix_lower_plane"}}}},
      {3, "division algebra laws",
       {{"algebra", 10000,
         {"moufang", "alternative_left", "alternative_right", "norm_multiplicative", "basis_associator_max"}}}},
      {4, "plane point invariants", {{"planes", 10000, {"sampled_invariants", "coordinate_invariants"}}}},
      {5, "Hopf maps", {{"hopf", 1000, {"unit_norm", "fiber_constant", "pole"}}}},
      {6, "nonvanishing of the shifted projection and of sigma",
       {{"lemma1", 100000, {"shifted_projection_min"}}, {"lemma2", 100000, {"sigma_norm_min"}}}},
      {7, "f fixes the lower plane, with equivariance and Gamma fiber collapse and separation",
       {{"theorem-a", 1000,
         {"fixes_lower_plane", "gamma_fiber_collapse", "separation_orbit_distance", "equivariance"}}}},
      {8, "projection lands on the lower Sigma",
       {{"theorem-a-prime", 10000, {"det_projection_max", "projection_min_eigenvalue"}}}},
      {9, "convexity and radial projection", {{"lemma3", 10000, {"chord_min_eigenvalue", "ray_single_crossing_failures"}}}},
      {10, "orbit classification of the trace-one slice",
       {{"lemma4", 1000,
         {"representative_PosDefInterior", "representative_IndefiniteOpen", "representative_SigmaSmooth",
          "representative_ZOuter", "representative_PlaneP", "conjugation_mismatches_ZOuter"}}}},
      {11, "phi restriction, antipodal infinity locus, equivariance, fiber dimensions",
       {{"theorem-b", 1000, {"restriction_identity", "infinity_antipodal_spectrum", "equivariance", "fiber_dim"}},
        {"fiber-dims", 1000, {"fiber_dim", "fiber_dim_deviation"}}}},
      {12, "normalized conjugate square lies on Sigma",
       {{"theorem-b-prime", 10000, {"lambda1_abs_max", "lambda2_min"}}}},
      {13, "secant identity and dual plane projection, with a negative control",
       {{"chordal", 1000, {"pair_residual", "control_witness_min"}}, {"twistor", 1000, {"dual_plane_spectrum"}}}},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = evaluate(c, detail);
    } catch (const std::exception& e) {
      detail += std::string(" error: ") + e.what();
    }
    failures += ok ? 0 : 1;
    std::printf("%s criterion %d: %s:%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), detail.c_str());
    std::fflush(stdout);
  }
  std::string detail;
  const bool ok = determinism(detail);
  failures += ok ? 0 : 1;
  std::printf("%s criterion 14: determinism of verify all:%s\n", ok ? "PASS" : "FAIL", detail.c_str());
  return failures == 0 ? 0 : 1;
}

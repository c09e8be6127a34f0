// The check registry and deterministic report assembly.
#pragma once

#include "frpoisson/scenario.hpp"

namespace frp {

// Closed registry, in report order:
//   cyb                       exact CYB for every named r-matrix
//   section2                  the section-2 identity suite per named r-matrix
//   rgamma_cyb                r_Γ passes CYB exactly on the gauge algebra
//   sgamma_symmetric_part     s_Γ block identity (exact) + σ_Γ(s_Γ) field-zero
//   jacobi                    [π_Γ, π_Γ] exact-zero or field-zero
//   gauge_poisson             [ρ(x), π] − ρ(δ_r(x)) field-zero per basis x
//   quasi                     Q axioms: [Q,Q] = ρ(φ_s), invariance, round-trip
//   qs_lambda_independence    q_s = quasi_from_poisson for Λ and −Λ, exactly
//   orientation_independence  edge-reversal pushforward identity, pointwise
//   local_move_independence   local-move pushforward identity, pointwise
//   fusion_theorem            fuse_poisson matches π of the fused graph, exactly
//   polyuble_multiplicativity multiplicativity on 2-vertex parallel graphs
//   gauge_equivariance        holonomy equivariance under random gauges
const std::vector<std::string>& check_registry();

struct CheckResult {
  std::string check;
  std::string verdict;  // "pass" | "sampled-pass" | "fail"
  double witness = 0;   // max residual (0 for exact passes)
  std::string detail;
};

struct Report {
  std::string scenario_name;
  std::uint64_t seed;
  double tol;
  int samples;
  std::vector<std::string> checks;
  std::vector<CheckResult> results;
  bool all_pass = true;
  // non-deterministic envelope
  double wall_ms = 0;
  std::map<std::string, double> per_check_ms;
};

// Executes the scenario's checks (registry order). Throws SchemaError when a
// check name is unknown or required scenario data is missing.
Report run_checks(const Scenario& s);

// format: "text" or "json". The JSON form is {"report": ..., "envelope": ...}
// and the "report" sub-document is byte-identical across runs with the same
// (scenario, seed).
std::string emit_report(const Report& r, const std::string& format);

inline int exit_code(const Report& r) { return r.all_pass ? 0 : 1; }

}  // namespace frp

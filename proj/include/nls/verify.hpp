#pragma once

#include <optional>
#include <string>
#include <vector>

namespace nls {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  // Force gamma = 0 in every fixture-based check and additionally demand
  // unitarity and reciprocity from all five figure fixtures (every run is
  // linear then, so both must hold).
  bool gamma_zero = false;
  // Replace both adaptive tolerances everywhere in the battery; intended
  // for deliberate-perturbation experiments.
  std::optional<double> tolerance_override;
};

// The self-check battery behind `nls-scatter verify`: free-space runs,
// the analytic rectangular-barrier formula, linear Wronskian constancy,
// the closed-form cross-checks, the half-interval unitarity identity, the
// Wronskian drift quadrature, the reversed-potential incidence check, and
// an integrator convergence probe against a fixed-step reference.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);
std::string format_verification_report(const std::vector<CheckResult>& results);

}  // namespace nls

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nls/scattering.hpp"

namespace nls {

enum class GridSpacing { Linear, Log };

struct SweepSpec {
  ScatterConfig config;
  double e_min = 0.1;
  double e_max = 10.0;
  int n_points = 200;
  GridSpacing grid = GridSpacing::Linear;
  // recompute each point at tightened resolution and flag it converged
  // when every R and T moves by less than 1e-7
  bool verify_convergence = false;
  bool annotate_theorems = false;
  int threads = 0;  // 0 = one worker per hardware thread
};

void validate(const SweepSpec& spec);

struct SweepRow {
  double E = 0.0;
  ScatteringResult result;
  bool converged = true;
  std::string error;  // empty on success; failed points do not abort the sweep
  bool ok() const { return error.empty(); }
};

struct SweepSummary {
  double max_refl_asym = 0.0;        // max |R_left - R_right|
  double max_trans_asym = 0.0;       // max |T_left - T_right|
  double max_unitarity_left = 0.0;   // max |R_left + T_left - 1|
  double max_unitarity_right = 0.0;  // max |R_right + T_right - 1|
  std::optional<double> max_wronskian_split;  // max |W1 - W2|, two-sided only
  int failed_points = 0;
};

struct SweepTable {
  std::vector<SweepRow> rows;  // strictly increasing in E
  SweepSummary summary;
};

// Evaluates one ScatteringResult per grid point, optionally in parallel.
// The table is a pure function of the spec: serial and parallel execution
// produce bitwise-identical results. Throws TotalSweepFailure only if
// every point fails.
SweepTable run_sweep(const SweepSpec& spec);

double convergence_shift_threshold();  // 1e-7

// Expected behaviour of a run, classified by geometry and potential
// symmetry, against measured sweep maxima.
struct PropertyCheck {
  std::string name;
  bool expected_to_hold = true;
  double measured = 0.0;
  // "PASS", "FAIL-as-expected", "UNEXPECTED", or "INCONCLUSIVE"
  std::string verdict;
  bool as_expected = false;
};

struct TheoremReport {
  int regime = 0;  // 1: [-L,L] symmetric, 2: [-L,L] asymmetric,
                   // 3: [0,L] symmetric,  4: [0,L] asymmetric
  bool linear = false;
  std::string description;
  std::vector<PropertyCheck> checks;
  bool all_as_expected = false;
};

// A property counts as holding when its measured maximum is below 1e-6 and
// as violated above 1e-3; the gap in between is reported INCONCLUSIVE.
TheoremReport theorem_report(const SweepTable& table, const ScatterConfig& cfg);

std::string to_string(const TheoremReport& report);

}  // namespace nls

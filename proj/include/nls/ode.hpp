#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace nls {

// Right-hand side of the scalar second-order problem y'' = rhs(x, y, y').
using SecondOrderRhs = std::function<double(double x, double y, double dy)>;

struct OdeProblem {
  SecondOrderRhs rhs;
  double x_start = 0.0;
  double x_end = 0.0;  // may lie on either side of x_start
  double y0 = 0.0;
  double dy0 = 0.0;
};

enum class StepMode { FixedStep, Adaptive };

struct IntegratorConfig {
  StepMode mode = StepMode::Adaptive;
  // fixed-step mode: classical RK4 on a uniform grid, last step shortened
  // to land exactly on x_end
  double step = 1e-3;
  // adaptive mode: Fehlberg 4(5) embedded pair, local error per step kept
  // below abs_tol + rel_tol*|state| componentwise
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  std::int64_t max_steps = 10'000'000;
};

struct StatePoint {
  double x = 0.0;
  double y = 0.0;
  double dy = 0.0;
};

struct Trajectory {
  double final_value = 0.0;
  double final_slope = 0.0;
  std::int64_t steps_taken = 0;  // attempted steps, including rejections
  // states at the caller-requested sample positions, in request order
  std::vector<StatePoint> samples;
};

void validate(const IntegratorConfig& cfg);

// Integrates the problem from x_start to x_end and returns the end state.
// sample_points, if given, must be ordered along the integration direction
// and lie inside the integration window; the trajectory is forced to land
// on each of them exactly.
//
// Results are pure functions of the inputs: identical calls produce
// identical bits, and the integration is safe to run concurrently.
Trajectory integrate(const OdeProblem& problem, const IntegratorConfig& cfg,
                     std::span<const double> sample_points = {});

// Returns a copy of cfg with the resolution tightened one notch: half the
// step in fixed mode, a tenth of both tolerances in adaptive mode. Used by
// per-point convergence verification.
IntegratorConfig tightened(const IntegratorConfig& cfg);

}  // namespace nls

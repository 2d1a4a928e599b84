#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "nls/errors.hpp"
#include "nls/ode.hpp"

using nls::IntegratorConfig;
using nls::OdeProblem;
using nls::StepMode;
using nls::Trajectory;

namespace {

double harmonic(double, double y, double) { return -y; }

// y'' = -[1 + 3 e^{-x^2}] y: linear Gaussian well at k = 1
double gaussian_well(double x, double y, double) { return -(1.0 + 3.0 * std::exp(-x * x)) * y; }

IntegratorConfig adaptive(double tol = 1e-10) {
  IntegratorConfig cfg;
  cfg.mode = StepMode::Adaptive;
  cfg.abs_tol = tol;
  cfg.rel_tol = tol;
  return cfg;
}

IntegratorConfig fixed(double h) {
  IntegratorConfig cfg;
  cfg.mode = StepMode::FixedStep;
  cfg.step = h;
  return cfg;
}

}  // namespace

TEST_CASE("cosine solution reaches pi/2") {
  const Trajectory t = nls::integrate({harmonic, 0.0, M_PI_2, 1.0, 0.0}, adaptive());
  CHECK(std::abs(t.final_value) < 1e-9);
  CHECK(std::abs(t.final_slope + 1.0) < 1e-9);
}

TEST_CASE("sine solution reaches pi") {
  const Trajectory t = nls::integrate({harmonic, 0.0, M_PI, 0.0, 1.0}, adaptive());
  CHECK(std::abs(t.final_value) < 1e-8);
  CHECK(std::abs(t.final_slope + 1.0) < 1e-8);
}

TEST_CASE("fixed step agrees with a tenfold finer reference on the Gaussian well") {
  const Trajectory coarse = nls::integrate({gaussian_well, 0.0, 5.0, 1.0, 0.0}, fixed(1e-3));
  const Trajectory fine = nls::integrate({gaussian_well, 0.0, 5.0, 1.0, 0.0}, fixed(1e-4));
  CHECK(std::abs(coarse.final_value - fine.final_value) < 1e-8);
  CHECK(std::abs(coarse.final_slope - fine.final_slope) < 1e-8);
}

TEST_CASE("fixed-step error decays like h^4 on the cosine problem") {
  auto error_at = [](double h) {
    const Trajectory t = nls::integrate({harmonic, 0.0, M_PI_2, 1.0, 0.0}, fixed(h));
    return std::abs(t.final_value - std::cos(M_PI_2));
  };
  const double e1 = error_at(0.02);
  const double e2 = error_at(0.01);
  const double e3 = error_at(0.005);
  CHECK(e1 / e2 > 8.0);
  CHECK(e1 / e2 < 32.0);
  CHECK(e2 / e3 > 8.0);
  CHECK(e2 / e3 < 32.0);
}

TEST_CASE("round trip on a linear problem returns the initial state") {
  const Trajectory fwd = nls::integrate({gaussian_well, 0.0, 5.0, 1.0, 0.0}, adaptive());
  const Trajectory back =
      nls::integrate({gaussian_well, 5.0, 0.0, fwd.final_value, fwd.final_slope}, adaptive());
  CHECK(std::abs(back.final_value - 1.0) < 1e-8);
  CHECK(std::abs(back.final_slope) < 1e-8);
}

TEST_CASE("identical inputs produce identical bits") {
  const Trajectory a = nls::integrate({gaussian_well, 0.0, 5.0, 1.0, 0.0}, adaptive());
  const Trajectory b = nls::integrate({gaussian_well, 0.0, 5.0, 1.0, 0.0}, adaptive());
  CHECK(std::memcmp(&a.final_value, &b.final_value, sizeof(double)) == 0);
  CHECK(std::memcmp(&a.final_slope, &b.final_slope, sizeof(double)) == 0);
  CHECK(a.steps_taken == b.steps_taken);
}

TEST_CASE("leftward integration mirrors rightward on an even problem") {
  const Trajectory right = nls::integrate({gaussian_well, 0.0, 5.0, 1.0, 0.0}, adaptive());
  const Trajectory left = nls::integrate({gaussian_well, 0.0, -5.0, 1.0, 0.0}, adaptive());
  CHECK(left.final_value == right.final_value);
  CHECK(left.final_slope == -right.final_slope);
}

TEST_CASE("requested samples land exactly and match the solution") {
  const std::vector<double> pts{0.5, 1.0, 2.0};
  const Trajectory t = nls::integrate({harmonic, 0.0, 3.0, 1.0, 0.0}, adaptive(), pts);
  REQUIRE(t.samples.size() == 3);
  for (size_t i = 0; i < pts.size(); ++i) {
    CHECK(t.samples[i].x == pts[i]);
    CHECK(std::abs(t.samples[i].y - std::cos(pts[i])) < 1e-9);
    CHECK(std::abs(t.samples[i].dy + std::sin(pts[i])) < 1e-9);
  }
}

TEST_CASE("requesting samples leaves the final state inside tolerance") {
  const std::vector<double> pts{0.7, 1.9, 3.1, 4.6};
  const Trajectory plain = nls::integrate({gaussian_well, 0.0, 5.0, 1.0, 0.0}, adaptive());
  const Trajectory sampled = nls::integrate({gaussian_well, 0.0, 5.0, 1.0, 0.0}, adaptive(), pts);
  CHECK(std::abs(plain.final_value - sampled.final_value) < 1e-8);
  CHECK(std::abs(plain.final_slope - sampled.final_slope) < 1e-8);
}

TEST_CASE("fixed mode shortens the last step to land on x_end") {
  const Trajectory t = nls::integrate({harmonic, 0.0, 1.0, 1.0, 0.0}, fixed(0.3));
  CHECK(std::abs(t.final_value - std::cos(1.0)) < 1e-4);
  CHECK(t.steps_taken == 4);
}

TEST_CASE("step limit is reported") {
  IntegratorConfig cfg = fixed(1e-3);
  cfg.max_steps = 3;
  CHECK_THROWS_AS(nls::integrate({harmonic, 0.0, 1.0, 1.0, 0.0}, cfg), nls::StepLimitExceeded);
}

TEST_CASE("exponential blow-up is reported as non-finite") {
  auto exploding = [](double, double y, double) { return 1e6 * y; };
  CHECK_THROWS_AS(nls::integrate({exploding, 0.0, 10.0, 1.0, 0.0}, fixed(1e-2)),
                  nls::NonFiniteState);
  CHECK_THROWS_AS(nls::integrate({exploding, 0.0, 10.0, 1.0, 0.0}, adaptive(1e-8)),
                  nls::NonFiniteState);
}

TEST_CASE("configuration invariants are enforced") {
  IntegratorConfig bad_step = fixed(0.0);
  CHECK_THROWS_AS(nls::integrate({harmonic, 0.0, 1.0, 1.0, 0.0}, bad_step), nls::ConfigError);

  IntegratorConfig bad_tol = adaptive();
  bad_tol.rel_tol = 1.5;
  CHECK_THROWS_AS(nls::integrate({harmonic, 0.0, 1.0, 1.0, 0.0}, bad_tol), nls::ConfigError);

  IntegratorConfig bad_count = adaptive();
  bad_count.max_steps = 0;
  CHECK_THROWS_AS(nls::integrate({harmonic, 0.0, 1.0, 1.0, 0.0}, bad_count), nls::ConfigError);

  const std::vector<double> unordered{2.0, 1.0};
  CHECK_THROWS_AS(nls::integrate({harmonic, 0.0, 3.0, 1.0, 0.0}, adaptive(), unordered),
                  nls::ConfigError);
  const std::vector<double> outside{4.0};
  CHECK_THROWS_AS(nls::integrate({harmonic, 0.0, 3.0, 1.0, 0.0}, adaptive(), outside),
                  nls::ConfigError);
}

TEST_CASE("tightened halves the step and tenths the tolerances") {
  const IntegratorConfig f = nls::tightened(fixed(1e-3));
  CHECK(f.step == doctest::Approx(5e-4));
  const IntegratorConfig a = nls::tightened(adaptive(1e-10));
  CHECK(a.abs_tol == doctest::Approx(1e-11));
  CHECK(a.rel_tol == doctest::Approx(1e-11));
}

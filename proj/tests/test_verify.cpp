#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nls/verify.hpp"

using namespace nls;

TEST_CASE("the self-check battery passes on a pristine build") {
  const auto results = run_verification();
  CHECK(results.size() >= 9);
  for (const CheckResult& r : results) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
  CHECK(all_passed(results));
}

TEST_CASE("a loosened tolerance is caught by the convergence probe") {
  VerifyOptions opt;
  opt.tolerance_override = 1e-3;
  const auto results = run_verification(opt);
  CHECK(!all_passed(results));
  bool convergence_failed = false;
  for (const CheckResult& r : results) {
    if (r.name == "integrator convergence" && !r.pass) convergence_failed = true;
  }
  CHECK(convergence_failed);
}

TEST_CASE("forcing gamma to zero restores unitarity in every fixture") {
  VerifyOptions opt;
  opt.gamma_zero = true;
  const auto results = run_verification(opt);
  int fixture_checks = 0;
  for (const CheckResult& r : results) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
    if (r.name.find("gamma = 0") != std::string::npos) ++fixture_checks;
  }
  CHECK(fixture_checks == 5);
}

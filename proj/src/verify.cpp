#include "nls/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nls/errors.hpp"
#include "nls/fixtures.hpp"
#include "nls/scattering.hpp"
#include "nls/sweep.hpp"

namespace nls {

namespace {

// Transmission through a rectangular step of height V0 and width w at
// energy E, valid for barriers and wells (2m = hbar = 1).
double rectangular_transmission(double V0, double w, double E) {
  if (E == V0) {
    return 1.0 / (1.0 + E * w * w / 4.0);
  }
  if (E < V0) {
    const double kappa = std::sqrt(V0 - E);
    const double s = std::sinh(kappa * w);
    return 1.0 / (1.0 + V0 * V0 * s * s / (4.0 * E * (V0 - E)));
  }
  const double q = std::sqrt(E - V0);
  const double s = std::sin(q * w);
  return 1.0 / (1.0 + V0 * V0 * s * s / (4.0 * E * (E - V0)));
}

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

class Battery {
 public:
  explicit Battery(const VerifyOptions& opt) : opt_(opt) {}

  std::vector<CheckResult> run() {
    free_space(true);
    free_space(false);
    rectangular_oracle();
    linear_wronskian();
    closed_form_cross_check();
    unitarity_identity();
    wronskian_quadrature();
    reversed_incidence();
    convergence_probe();
    if (opt_.gamma_zero) linear_fixture_unitarity();
    return std::move(results_);
  }

 private:
  ScatterConfig fixture_config(int n) const {
    ScatterConfig cfg = figure_fixture(n).sweep.config;
    if (opt_.gamma_zero) cfg.nonlinearity.gamma = 0.0;
    apply_tolerance(cfg.integrator);
    return cfg;
  }

  void apply_tolerance(IntegratorConfig& integ) const {
    if (opt_.tolerance_override) {
      integ.abs_tol = *opt_.tolerance_override;
      integ.rel_tol = *opt_.tolerance_override;
    }
  }

  void record(const std::string& name, double worst, double tol) {
    results_.push_back({name, worst < tol, "max deviation " + sci(worst) + " (tol " + sci(tol) + ")"});
  }

  void fail(const std::string& name, const std::string& why) {
    results_.push_back({name, false, why});
  }

  void free_space(bool two_sided) {
    const std::string name =
        two_sided ? "free space, confinement [-L, L]" : "free space, confinement [0, L]";
    try {
      ScatterConfig cfg;
      cfg.potential = GaussianPotential{0.0, 1.0};
      cfg.nonlinearity = {NonlinearityKind::None, 0.0};
      if (two_sided) {
        cfg.geometry = SymmetricInterval{5.0};
      } else {
        cfg.geometry = HalfInterval{5.0};
      }
      apply_tolerance(cfg.integrator);
      double worst = 0.0;
      for (double k : {0.5, 1.0, 2.3}) {
        const ScatteringResult res = scatter_point(cfg, k);
        worst = std::max({worst, res.R_left, res.R_right, std::abs(res.T_left - 1.0),
                          std::abs(res.T_right - 1.0)});
      }
      record(name, worst, 1e-8);
    } catch (const Error& e) {
      fail(name, e.what());
    }
  }

  void rectangular_oracle() {
    const std::string name = "rectangular barrier against analytic formula";
    try {
      ScatterConfig cfg;
      cfg.potential = RectangularPotential{2.0, -1.0, 1.0};
      cfg.nonlinearity = {NonlinearityKind::None, 0.0};
      cfg.geometry = SymmetricInterval{1.0};
      apply_tolerance(cfg.integrator);
      double worst = 0.0;
      for (double E : {0.5, 1.0, 1.5, 3.0}) {
        const ScatteringResult res = scatter_at_energy(cfg, E);
        const double exact = rectangular_transmission(2.0, 2.0, E);
        worst = std::max({worst, std::abs(res.T_left - exact), std::abs(res.T_right - exact)});
      }
      record(name, worst, 1e-6);
    } catch (const Error& e) {
      fail(name, e.what());
    }
  }

  void linear_wronskian() {
    const std::string name = "linear Wronskian constancy";
    try {
      ScatterConfig cfg;
      cfg.potential = GaussianPotential{-3.0, 1.0};
      cfg.nonlinearity = {NonlinearityKind::None, 0.0};
      cfg.geometry = SymmetricInterval{5.0};
      apply_tolerance(cfg.integrator);
      double worst = 0.0;
      for (double k : {0.4, 1.0, 1.8, 3.0}) {
        const BasisEndpointData ep = integrate_basis(cfg, k);
        worst = std::max({worst, std::abs(ep.W1 - 1.0), std::abs(ep.W2 - 1.0)});
      }
      record(name, worst, 1e-8);
    } catch (const Error& e) {
      fail(name, e.what());
    }
  }

  void closed_form_cross_check() {
    const std::string name = "symmetric closed form against two-sided amplitudes";
    try {
      const ScatterConfig cfg = fixture_config(1);
      double worst = 0.0;
      for (double E : {0.5, 1.0, 2.0, 5.0, 9.7}) {
        const ScatteringResult res = scatter_at_energy(cfg, E);
        const auto [R, T] = amplitudes_symmetric_closed_form(res.endpoint, res.k);
        worst = std::max({worst, std::abs(res.R_left - R), std::abs(res.T_left - T)});
      }
      record(name, worst, 1e-9);
    } catch (const Error& e) {
      fail(name, e.what());
    }
  }

  void unitarity_identity() {
    const std::string name = "half-interval unitarity identity";
    try {
      const ScatterConfig cfg = fixture_config(4);
      double worst = 0.0;
      for (double E : {0.5, 1.0, 2.0, 5.0, 9.7}) {
        const ScatteringResult res = scatter_at_energy(cfg, E);
        const double defect = unitarity_defect(res.endpoint, res.k);
        worst = std::max(worst, std::abs(defect - (res.sum_left - 1.0)));
      }
      record(name, worst, 1e-10);
    } catch (const Error& e) {
      fail(name, e.what());
    }
  }

  void wronskian_quadrature() {
    const std::string name = "Wronskian drift against its quadrature";
    try {
      const ScatterConfig cfg = fixture_config(4);
      const ScatteringResult res = scatter_at_energy(cfg, 1.0, 4001);
      const double drift = res.endpoint.W1 - 1.0;
      const double quad = wronskian_drift_quadrature(res.endpoint, cfg.nonlinearity);
      record(name, std::abs(drift - quad), 1e-7);
    } catch (const Error& e) {
      fail(name, e.what());
    }
  }

  void reversed_incidence() {
    const std::string name = "right incidence against reversed potential";
    try {
      const ScatterConfig cfg = fixture_config(5);
      ScatterConfig mirrored = cfg;
      const double L = confinement_length(cfg.geometry);
      const auto& p = std::get<ShiftedGaussianPotential>(cfg.potential);
      mirrored.potential = ShiftedGaussianPotential{p.V0, L - p.mu};
      double worst = 0.0;
      for (double E : {0.7, 1.0, 3.3}) {
        const ScatteringResult direct = scatter_at_energy(cfg, E);
        const ScatteringResult swapped = scatter_at_energy(mirrored, E);
        worst = std::max({worst, std::abs(direct.R_right - swapped.R_left),
                          std::abs(direct.T_right - swapped.T_left)});
      }
      record(name, worst, 1e-9);
    } catch (const Error& e) {
      fail(name, e.what());
    }
  }

  void convergence_probe() {
    const std::string name = "integrator convergence";
    try {
      const ScatterConfig cfg = fixture_config(1);
      ScatterConfig reference = cfg;
      reference.integrator.mode = StepMode::FixedStep;
      reference.integrator.step = 2e-4;
      double worst = 0.0;
      for (double E : {1.0, 4.0}) {
        const ScatteringResult res = scatter_at_energy(cfg, E);
        const ScatteringResult ref = scatter_at_energy(reference, E);
        worst = std::max({worst, std::abs(res.R_left - ref.R_left),
                          std::abs(res.T_left - ref.T_left)});
      }
      record(name, worst, 1e-7);
    } catch (const Error& e) {
      fail(name, e.what());
    }
  }

  void linear_fixture_unitarity() {
    for (int n = 1; n <= kNumFigures; ++n) {
      const std::string name = "fixture " + std::to_string(n) + " unitarity at gamma = 0";
      try {
        SweepSpec spec = figure_fixture(n).sweep;
        spec.config.nonlinearity.gamma = 0.0;
        apply_tolerance(spec.config.integrator);
        spec.n_points = 25;
        spec.verify_convergence = false;
        const SweepTable table = run_sweep(spec);
        const double worst = std::max({table.summary.max_unitarity_left,
                                       table.summary.max_unitarity_right,
                                       table.summary.max_refl_asym, table.summary.max_trans_asym});
        record(name, worst, 1e-8);
      } catch (const Error& e) {
        fail(name, e.what());
      }
    }
  }

  VerifyOptions opt_;
  std::vector<CheckResult> results_;
};

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  return Battery(options).run();
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

std::string format_verification_report(const std::vector<CheckResult>& results) {
  size_t width = 0;
  for (const CheckResult& r : results) width = std::max(width, r.name.size());
  std::ostringstream os;
  for (const CheckResult& r : results) {
    os << (r.pass ? "PASS  " : "FAIL  ") << r.name;
    for (size_t pad = r.name.size(); pad < width + 2; ++pad) os << ' ';
    os << r.detail << "\n";
  }
  return os.str();
}

}  // namespace nls

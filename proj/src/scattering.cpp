#include "nls/scattering.hpp"

#include <cmath>
#include <string>

#include "nls/errors.hpp"

namespace nls {

namespace {

using Complex = std::complex<double>;

constexpr double kDegenerateRel = 1e-14;

// Denominators are compared against the combined magnitude of their terms;
// an absolute threshold cannot serve across the V0 and E ranges of
// interest.
void check_denominator(const Complex& d, double scale, double k) {
  if (!(std::abs(d) > kDegenerateRel * scale)) {
    throw DegenerateDenominator("amplitude denominator vanished at k = " + std::to_string(k));
  }
}

SecondOrderRhs make_rhs(const ScatterConfig& cfg, double k, bool reversed) {
  const double L = confinement_length(cfg.geometry);
  const double k2 = k * k;
  if (!reversed) {
    return [&cfg, k2](double x, double y, double) {
      const double V = eval_potential(cfg.potential, x);
      const double gf = eval_nonlinearity(cfg.nonlinearity, std::abs(y));
      return -(k2 - V + gf) * y;
    };
  }
  return [&cfg, k2, L](double x, double y, double) {
    const double V = eval_potential(cfg.potential, L - x);
    const double gf = eval_nonlinearity(cfg.nonlinearity, std::abs(y));
    return -(k2 - V + gf) * y;
  };
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
  std::vector<double> g(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    g[static_cast<size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  }
  g.back() = hi;
  return g;
}

void fill_probabilities(ScatteringResult& res) {
  res.R_left = std::norm(res.r_left);
  res.R_right = std::norm(res.r_right);
  res.T_left = std::norm(res.t_left);
  res.T_right = std::norm(res.t_right);
  res.sum_left = res.R_left + res.T_left;
  res.sum_right = res.R_right + res.T_right;
}

}  // namespace

void validate(const ScatterConfig& cfg) {
  validate(cfg.potential);
  validate(cfg.nonlinearity);
  validate(cfg.geometry);
  validate(cfg.integrator);
}

double wronskian(double u, double du, double v, double dv) { return u * dv - du * v; }

BasisEndpointData integrate_basis(const ScatterConfig& cfg, double k, int n_samples) {
  if (!(k >= k_min_wavenumber)) {
    throw KTooSmall("k = " + std::to_string(k) + " is below the supported minimum " +
                    std::to_string(k_min_wavenumber));
  }

  const double L = confinement_length(cfg.geometry);
  BasisEndpointData ep;
  ep.L = L;
  ep.two_sided = is_two_sided(cfg.geometry);

  const SecondOrderRhs rhs = make_rhs(cfg, k, /*reversed=*/false);
  std::vector<double> samples;
  if (n_samples > 0) samples = uniform_grid(0.0, L, std::max(2, n_samples));

  const Trajectory u_right =
      integrate({rhs, 0.0, L, 1.0, 0.0}, cfg.integrator, samples);
  const Trajectory v_right =
      integrate({rhs, 0.0, L, 0.0, 1.0}, cfg.integrator, samples);
  ep.u1 = u_right.final_value;
  ep.du1 = u_right.final_slope;
  ep.v1 = v_right.final_value;
  ep.dv1 = v_right.final_slope;
  ep.W1 = wronskian(ep.u1, ep.du1, ep.v1, ep.dv1);
  ep.u_samples = u_right.samples;
  ep.v_samples = v_right.samples;

  if (ep.two_sided) {
    const Trajectory u_left = integrate({rhs, 0.0, -L, 1.0, 0.0}, cfg.integrator);
    const Trajectory v_left = integrate({rhs, 0.0, -L, 0.0, 1.0}, cfg.integrator);
    ep.u2 = u_left.final_value;
    ep.du2 = u_left.final_slope;
    ep.v2 = v_left.final_value;
    ep.dv2 = v_left.final_slope;
    ep.W2 = wronskian(ep.u2, ep.du2, ep.v2, ep.dv2);
  } else {
    const SecondOrderRhs rhs_rev = make_rhs(cfg, k, /*reversed=*/true);
    const Trajectory u_rev = integrate({rhs_rev, 0.0, L, 1.0, 0.0}, cfg.integrator);
    const Trajectory v_rev = integrate({rhs_rev, 0.0, L, 0.0, 1.0}, cfg.integrator);
    BasisEndpointData::ReversedEndpoint r;
    r.u = u_rev.final_value;
    r.du = u_rev.final_slope;
    r.v = v_rev.final_value;
    r.dv = v_rev.final_slope;
    r.W = wronskian(r.u, r.du, r.v, r.dv);
    ep.reversed = r;
  }
  return ep;
}

ScatteringResult amplitudes_two_sided(const BasisEndpointData& ep, double k) {
  if (!ep.two_sided) {
    throw ConfigError("amplitudes_two_sided requires endpoint data of the two-sided geometry");
  }
  const double k2 = k * k;

  // real brackets shared by every amplitude; the denominator mixes the
  // difference combinations, the r numerators the sum combinations, which
  // is what makes |D|^2 - |num_r|^2 = 4 k^2 W1 W2 an exact identity (and
  // hence R + T = 1 whenever W1 = W2)
  const double F = ep.du2 * ep.dv1 - ep.du1 * ep.dv2;
  const double G1 = ep.u2 * ep.dv1 - ep.du2 * ep.v1;
  const double G2 = ep.u1 * ep.dv2 - ep.du1 * ep.v2;
  const double A1 = ep.u2 * ep.dv1 + ep.du2 * ep.v1;
  const double A2 = ep.u1 * ep.dv2 + ep.du1 * ep.v2;
  const double H = ep.u1 * ep.v2 - ep.u2 * ep.v1;

  const Complex denom(F - k2 * H, k * (G1 + G2));
  const double scale = std::abs(F) + k2 * std::abs(H) + k * (std::abs(G1) + std::abs(G2));
  check_denominator(denom, scale, k);

  const Complex num_r_left(-F - k2 * H, k * (A1 - A2));
  const Complex num_r_right(-F - k2 * H, -k * (A1 - A2));
  const Complex ik(0.0, k);
  const Complex phase = std::exp(Complex(0.0, -2.0 * k * ep.L));

  ScatteringResult res;
  res.k = k;
  res.r_left = phase * num_r_left / denom;
  res.r_right = phase * num_r_right / denom;
  res.t_left = phase * 2.0 * ik * ep.W1 / denom;
  res.t_right = phase * 2.0 * ik * ep.W2 / denom;
  fill_probabilities(res);
  res.endpoint = ep;
  return res;
}

namespace {

// Left-incidence amplitudes of the half-interval geometry from endpoint
// values at x = L.
void half_interval_left(double k, double L, double u, double du, double v, double dv, double W,
                        Complex& r, Complex& t) {
  const double k2 = k * k;
  const Complex denom(k2 * v - du, k * (dv + u));
  const double scale = k2 * std::abs(v) + std::abs(du) + k * (std::abs(dv) + std::abs(u));
  check_denominator(denom, scale, k);

  const Complex num_r(k2 * v + du, k * (dv - u));
  const Complex phase = std::exp(Complex(0.0, -k * L));
  r = num_r / denom;
  t = phase * Complex(0.0, 2.0 * k) * W / denom;
}

}  // namespace

ScatteringResult amplitudes_half_interval(const BasisEndpointData& ep, double k) {
  if (ep.two_sided || !ep.reversed) {
    throw ConfigError(
        "amplitudes_half_interval requires endpoint data of the half-interval geometry");
  }

  ScatteringResult res;
  res.k = k;
  half_interval_left(k, ep.L, ep.u1, ep.du1, ep.v1, ep.dv1, ep.W1, res.r_left, res.t_left);
  const auto& m = *ep.reversed;
  half_interval_left(k, ep.L, m.u, m.du, m.v, m.dv, m.W, res.r_right, res.t_right);
  fill_probabilities(res);
  res.endpoint = ep;
  return res;
}

std::pair<double, double> amplitudes_symmetric_closed_form(const BasisEndpointData& ep, double k) {
  const double k2 = k * k;
  const double rn = k2 * ep.u1 * ep.v1 + ep.du1 * ep.dv1;
  const double tn = ep.u1 * ep.dv1 - ep.du1 * ep.v1;
  const double d1 = k2 * ep.u1 * ep.v1 - ep.du1 * ep.dv1;
  const double d2 = ep.u1 * ep.dv1 + ep.du1 * ep.v1;
  const double delta = d1 * d1 + k2 * d2 * d2;
  if (!(delta > 0.0)) {
    throw DegenerateDenominator("closed-form denominator vanished at k = " + std::to_string(k));
  }
  return {rn * rn / delta, k2 * tn * tn / delta};
}

double unitarity_defect(const BasisEndpointData& ep, double k) {
  if (ep.two_sided) {
    throw ConfigError("unitarity_defect applies to the half-interval geometry");
  }
  const double k2 = k * k;
  const double u = ep.u1, du = ep.du1, v = ep.v1, dv = ep.dv1, W = ep.W1;
  // (R+T) - 1 = [S + 2k^2 W(2W-1)] / [S + 2k^2 W] - 1 = 4k^2 W(W-1) / M
  // with S = k^4 v^2 + u'^2 + k^2 v'^2 + k^2 u^2. The denominator
  // M = S + 2k^2 W expands to a cancellation-free sum of squares, which
  // keeps the defect accurate near transmission resonances where M is
  // small and R+T is huge.
  const double m1 = k2 * v - du;
  const double m2 = dv + u;
  const double denom = m1 * m1 + k2 * m2 * m2;
  const double scale = k2 * k2 * v * v + du * du + k2 * dv * dv + k2 * u * u +
                       2.0 * k2 * std::abs(W);
  if (!(denom > kDegenerateRel * scale)) {
    throw DegenerateDenominator("unitarity-defect denominator vanished at k = " +
                                std::to_string(k));
  }
  return 4.0 * k2 * W * (W - 1.0) / denom;
}

double wronskian_drift_quadrature(const BasisEndpointData& ep, const NonlinearitySpec& nl) {
  const auto& us = ep.u_samples;
  const auto& vs = ep.v_samples;
  if (us.size() != vs.size() || us.size() < 3) {
    throw ConfigError("wronskian_drift_quadrature needs matching dense samples; "
                      "request them from integrate_basis");
  }
  const size_t n = us.size();
  auto integrand = [&](size_t i) {
    const double u = us[i].y;
    const double v = vs[i].y;
    return (eval_nonlinearity(nl, std::abs(u)) - eval_nonlinearity(nl, std::abs(v))) * u * v;
  };
  // composite Simpson over the uniform grid; a trailing trapezoid cell
  // covers an even sample count
  const double h = (us.back().x - us.front().x) / static_cast<double>(n - 1);
  const size_t pairs = (n - 1) / 2;
  double sum = 0.0;
  for (size_t p = 0; p < pairs; ++p) {
    const size_t i = 2 * p;
    sum += integrand(i) + 4.0 * integrand(i + 1) + integrand(i + 2);
  }
  double result = sum * h / 3.0;
  if ((n - 1) % 2 != 0) {
    result += 0.5 * h * (integrand(n - 2) + integrand(n - 1));
  }
  return result;
}

ScatteringResult scatter_point(const ScatterConfig& cfg, double k, int n_samples) {
  const BasisEndpointData ep = integrate_basis(cfg, k, n_samples);
  return ep.two_sided ? amplitudes_two_sided(ep, k) : amplitudes_half_interval(ep, k);
}

ScatteringResult scatter_at_energy(const ScatterConfig& cfg, double energy, int n_samples) {
  if (!(energy > 0.0)) throw ConfigError("energy must be positive");
  return scatter_point(cfg, std::sqrt(energy), n_samples);
}

}  // namespace nls

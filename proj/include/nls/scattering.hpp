#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "nls/models.hpp"
#include "nls/ode.hpp"

namespace nls {

// Amplitudes carry k in denominators and t is proportional to k; below this
// wavenumber results are refused rather than returned inaccurately.
inline constexpr double k_min_wavenumber = 1e-3;

struct ScatterConfig {
  PotentialSpec potential;
  NonlinearitySpec nonlinearity;
  ConfinementGeometry geometry;
  IntegratorConfig integrator;
};

void validate(const ScatterConfig& cfg);

// Values and slopes of the basis pair u, v at the confinement endpoints,
// plus their Wronskians W = u v' - u' v. The basis is fixed by u(0) = 1,
// u'(0) = 0 and v(0) = 0, v'(0) = 1, so W(0) = 1; with nonlinearity on, W
// drifts along the trajectory and its endpoint values drive every
// unitarity and reciprocity violation this library measures.
struct BasisEndpointData {
  double L = 0.0;
  bool two_sided = false;

  double u1 = 0.0, du1 = 0.0, v1 = 0.0, dv1 = 0.0;  // at x = +L
  double W1 = 0.0;
  double u2 = 0.0, du2 = 0.0, v2 = 0.0, dv2 = 0.0;  // at x = -L, two-sided only
  double W2 = 0.0;

  // Basis of the spatially reversed potential V(L - x), integrated over
  // [0, L] with the same initial data. Right incidence on the half
  // interval is exactly left incidence on the reversed potential, so this
  // set supplies the right-incidence amplitudes there.
  struct ReversedEndpoint {
    double u = 0.0, du = 0.0, v = 0.0, dv = 0.0;
    double W = 0.0;
  };
  std::optional<ReversedEndpoint> reversed;

  // Dense (x, value, slope) samples of u and v on [0, L]; collected only
  // when requested, for the Wronskian drift diagnostic.
  std::vector<StatePoint> u_samples;
  std::vector<StatePoint> v_samples;
};

struct ScatteringResult {
  double k = 0.0;
  std::complex<double> r_left, r_right, t_left, t_right;
  double R_left = 0.0, R_right = 0.0;  // |r|^2
  double T_left = 0.0, T_right = 0.0;  // |t|^2
  double sum_left = 0.0, sum_right = 0.0;
  BasisEndpointData endpoint;
};

// u*dv - du*v.
double wronskian(double u, double du, double v, double dv);

// Integrates the basis pair from x = 0 outward: to both +-L for the
// two-sided geometry, to +L (plus the reversed-potential run) for the half
// interval. Each trajectory solves
//   psi'' + [k^2 - V(x) + gamma f(|psi|)] psi = 0
// with f evaluated on that trajectory's own amplitude. n_samples > 0
// requests that many uniform samples of u and v on [0, L].
BasisEndpointData integrate_basis(const ScatterConfig& cfg, double k, int n_samples = 0);

// Reflection/transmission amplitudes for the two-sided confinement [-L, L],
// obtained by matching the interior basis combination to plane waves at
// both endpoints. The common denominator is
//   D = [u2' v1' - u1' v2'] + ik([u2 v1' - u2' v1] + [u1 v2' - u1' v2])
//       - k^2 [u1 v2 - u2 v1];
// t_left carries W1 (the Wronskian at the exit endpoint +L), t_right
// carries W2, and the r numerators differ from each other only in the sign
// of their imaginary part, which forces R_left = R_right for every real
// potential and nonlinearity.
ScatteringResult amplitudes_two_sided(const BasisEndpointData& ep, double k);

// Amplitudes for the half-interval confinement [0, L]. Left incidence:
//   r = [k^2 v + u' + ik(v' - u)] / [k^2 v - u' + ik(v' + u)]
//   t = 2ik W e^{-ikL}       / [k^2 v - u' + ik(v' + u)]
// with u, v, u', v' at x = L. Right incidence applies the same formulas to
// the reversed-potential basis.
ScatteringResult amplitudes_half_interval(const BasisEndpointData& ep, double k);

// Closed-form R and T for the two-sided geometry when the potential is
// symmetric, using only x = +L data:
//   R = (k^2 u1 v1 + u1' v1')^2 / Delta,  T = k^2 (u1 v1' - u1' v1)^2 / Delta,
//   Delta = (k^2 u1 v1 - u1' v1')^2 + k^2 (u1 v1' + u1' v1)^2.
// R + T = 1 identically.
std::pair<double, double> amplitudes_symmetric_closed_form(const BasisEndpointData& ep, double k);

// (R + T) - 1 for half-interval left incidence in closed form,
//   R + T = [S + 2 k^2 W (2W - 1)] / [S + 2 k^2 W],
//   S = k^4 v^2 + u'^2 + k^2 v'^2 + k^2 u^2,
// which equals 1 exactly when W = 1 (every linear run). Evaluated as
// 4 k^2 W (W - 1) / [(k^2 v - u')^2 + k^2 (v' + u)^2], the same quantity
// arranged without cancellation in the denominator.
double unitarity_defect(const BasisEndpointData& ep, double k);

// Drift of the basis Wronskian across [0, L] predicted by the field
// equation: quadrature of gamma [f(|u|) - f(|v|)] u v over the collected
// samples. Consistent with W1 - 1 whenever the samples are dense enough.
double wronskian_drift_quadrature(const BasisEndpointData& ep, const NonlinearitySpec& nl);

// One full scattering evaluation at wavenumber k (E = k^2).
ScatteringResult scatter_point(const ScatterConfig& cfg, double k, int n_samples = 0);
ScatteringResult scatter_at_energy(const ScatterConfig& cfg, double energy, int n_samples = 0);

}  // namespace nls

// Independent reference solutions used only by the test suite. Nothing here
// touches the library's integration or amplitude-assembly code paths.
#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace oracles {

using Complex = std::complex<double>;

struct PlaneWaveAmplitudes {
  Complex r;
  Complex t;
};

namespace detail {

using Mat = std::array<std::array<Complex, 2>, 2>;

inline Mat mul(const Mat& m, const Mat& n) {
  Mat out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out[i][j] = m[i][0] * n[0][j] + m[i][1] * n[1][j];
    }
  }
  return out;
}

// Coefficient map across a potential step at x, from wavenumber p to q:
// (C, D) = M (A, B) for psi = A e^{ipx} + B e^{-ipx} -> C e^{iqx} + D e^{-iqx}.
inline Mat interface(double x, Complex p, Complex q) {
  const Complex i(0.0, 1.0);
  const Complex half_sum = 0.5 * (1.0 + p / q);
  const Complex half_diff = 0.5 * (1.0 - p / q);
  Mat m{};
  m[0][0] = half_sum * std::exp(i * (p - q) * x);
  m[0][1] = half_diff * std::exp(-i * (p + q) * x);
  m[1][0] = half_diff * std::exp(i * (p + q) * x);
  m[1][1] = half_sum * std::exp(-i * (p - q) * x);
  return m;
}

}  // namespace detail

// Exact left-incidence amplitudes for a rectangular step of height V0 on
// [a, b] at energy E (2m = hbar = 1), via plane-wave matching at both
// edges. Valid above and below the step; q goes imaginary under it.
inline PlaneWaveAmplitudes rectangular_amplitudes(double V0, double a, double b, double E) {
  const Complex k(std::sqrt(E), 0.0);
  const Complex q = std::sqrt(Complex(E - V0, 0.0));
  const detail::Mat m =
      detail::mul(detail::interface(b, q, k), detail::interface(a, k, q));
  PlaneWaveAmplitudes out;
  out.r = -m[1][0] / m[1][1];
  out.t = m[0][0] + m[0][1] * out.r;
  return out;
}

inline double rectangular_transmission(double V0, double a, double b, double E) {
  return std::norm(rectangular_amplitudes(V0, a, b, E).t);
}

}  // namespace oracles

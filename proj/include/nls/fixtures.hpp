#pragma once

#include "nls/config_io.hpp"

namespace nls {

// Built-in sweep fixtures reproducing the five standard regimes:
//   1  [-L, L], Gaussian well V0 = -3, saturating nonlinearity
//   2  [-L, L], asymmetric piecewise Gaussian well, saturating
//   3  [-L, L], asymmetric piecewise Gaussian well, Kerr
//   4  [0, L],  Gaussian bump V0 = 3 centered at L/2, Kerr
//   5  [0, L],  same bump centered at 0.4 L, Kerr
// All use gamma = 1, L = 5, 200 linear energy points on [0.1, 10].
// Throws ConfigError unless 1 <= n <= 5.
RunConfig figure_fixture(int n);

inline constexpr int kNumFigures = 5;

}  // namespace nls

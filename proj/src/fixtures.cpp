#include "nls/fixtures.hpp"

#include <cmath>
#include <string>

#include "nls/errors.hpp"

namespace nls {

RunConfig figure_fixture(int n) {
  if (n < 1 || n > kNumFigures) {
    throw ConfigError("figure number must lie in 1.." + std::to_string(kNumFigures) + ", got " +
                      std::to_string(n));
  }

  constexpr double L = 5.0;
  constexpr double gamma = 1.0;
  // right-hand width of the asymmetric well: exp(-3x^2/2) = exp(-(x/w)^2)
  const double asym_width_right = std::sqrt(2.0 / 3.0);

  RunConfig cfg;
  SweepSpec& sweep = cfg.sweep;
  sweep.e_min = 0.1;
  sweep.e_max = 10.0;
  sweep.n_points = 200;
  sweep.grid = GridSpacing::Linear;
  sweep.verify_convergence = true;
  sweep.annotate_theorems = true;

  switch (n) {
    case 1:
      sweep.config.potential = GaussianPotential{-3.0, 1.0};
      sweep.config.nonlinearity = {NonlinearityKind::Saturating, gamma};
      sweep.config.geometry = SymmetricInterval{L};
      break;
    case 2:
      sweep.config.potential = PiecewiseGaussianPotential{-3.0, 1.0, asym_width_right};
      sweep.config.nonlinearity = {NonlinearityKind::Saturating, gamma};
      sweep.config.geometry = SymmetricInterval{L};
      break;
    case 3:
      sweep.config.potential = PiecewiseGaussianPotential{-3.0, 1.0, asym_width_right};
      sweep.config.nonlinearity = {NonlinearityKind::Kerr, gamma};
      sweep.config.geometry = SymmetricInterval{L};
      break;
    case 4:
      sweep.config.potential = ShiftedGaussianPotential{3.0, 0.5 * L};
      sweep.config.nonlinearity = {NonlinearityKind::Kerr, gamma};
      sweep.config.geometry = HalfInterval{L};
      break;
    case 5:
      sweep.config.potential = ShiftedGaussianPotential{3.0, 0.4 * L};
      sweep.config.nonlinearity = {NonlinearityKind::Kerr, gamma};
      sweep.config.geometry = HalfInterval{L};
      break;
  }
  return cfg;
}

}  // namespace nls

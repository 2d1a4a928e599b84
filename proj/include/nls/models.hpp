#pragma once

#include <utility>
#include <variant>
#include <vector>

namespace nls {

// Real potential profiles V(x). Heights are in energy units with 2m = 1,
// hbar = 1 (so k = sqrt(E)); positions are dimensionless lengths.

// V0 exp(-(x/width)^2), centered at the origin.
struct GaussianPotential {
  double V0 = 0.0;
  double width = 1.0;
};

// V0 exp(-(x - mu)^2); mu is the center position of the bump.
struct ShiftedGaussianPotential {
  double V0 = 0.0;
  double mu = 0.0;
};

// V0 exp(-(x/width_left)^2) for x <= 0, V0 exp(-(x/width_right)^2) for
// x > 0. Continuous at the joint, generally asymmetric.
struct PiecewiseGaussianPotential {
  double V0 = 0.0;
  double width_left = 1.0;
  double width_right = 1.0;
};

// V0 on [a, b], zero elsewhere.
struct RectangularPotential {
  double V0 = 0.0;
  double a = -1.0;
  double b = 1.0;
};

// Linear interpolation between (x, V) samples, strictly increasing in x.
// Queries outside the sample span throw TabulatedOutOfRange.
struct TabulatedPotential {
  std::vector<std::pair<double, double>> samples;
};

using PotentialSpec = std::variant<GaussianPotential, ShiftedGaussianPotential,
                                   PiecewiseGaussianPotential, RectangularPotential,
                                   TabulatedPotential>;

// Real nonlinearity profile entering the field equation as gamma*f(|psi|):
//   Kerr        f(a) = a^2
//   Saturating  f(a) = 1 / (1 + a^2)
//   None        gamma*f identically zero
enum class NonlinearityKind { None, Kerr, Saturating };

struct NonlinearitySpec {
  NonlinearityKind kind = NonlinearityKind::None;
  double gamma = 0.0;
};

// Confinement geometry of both the potential and the nonlinearity: outside
// the confinement interval the field equation is the free one.
struct SymmetricInterval {
  double L = 1.0;  // confinement on [-L, L]
};
struct HalfInterval {
  double L = 1.0;  // confinement on [0, L]
};
using ConfinementGeometry = std::variant<SymmetricInterval, HalfInterval>;

double eval_potential(const PotentialSpec& spec, double x);

// Returns gamma*f(amplitude); amplitude must be >= 0.
double eval_nonlinearity(const NonlinearitySpec& spec, double amplitude);

// True iff gamma*f is identically zero (linear problem).
bool is_linear(const NonlinearitySpec& spec);

// True iff V is even about the midpoint of the confinement interval (x = 0
// for SymmetricInterval, x = L/2 for HalfInterval). Decided analytically
// per kind; Tabulated profiles fall back to a sampled reflection test with
// tolerance 1e-12.
bool is_symmetric(const PotentialSpec& spec, const ConfinementGeometry& geometry);

double confinement_length(const ConfinementGeometry& geometry);
bool is_two_sided(const ConfinementGeometry& geometry);

void validate(const PotentialSpec& spec);
void validate(const NonlinearitySpec& spec);
void validate(const ConfinementGeometry& geometry);

}  // namespace nls

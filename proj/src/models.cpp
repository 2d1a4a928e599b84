#include "nls/models.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nls/errors.hpp"

namespace nls {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double eval_tabulated(const TabulatedPotential& p, double x) {
  const auto& s = p.samples;
  if (s.empty() || x < s.front().first || x > s.back().first) {
    throw TabulatedOutOfRange("tabulated potential queried at x = " + std::to_string(x) +
                              ", outside the sample span");
  }
  auto it = std::upper_bound(s.begin(), s.end(), x,
                             [](double v, const auto& q) { return v < q.first; });
  if (it == s.begin()) return s.front().second;
  if (it == s.end()) return s.back().second;
  const auto& [x1, v1] = *(it - 1);
  const auto& [x2, v2] = *it;
  const double w = (x - x1) / (x2 - x1);
  return v1 + w * (v2 - v1);
}

// Sampled reflection test about the interval midpoint, used for profiles
// with no analytic symmetry rule.
bool sampled_symmetric(const PotentialSpec& spec, double lo, double hi) {
  constexpr int n = 201;
  constexpr double tol = 1e-12;
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  for (int i = 0; i < n; ++i) {
    const double d = half * static_cast<double>(i) / (n - 1);
    if (std::abs(eval_potential(spec, mid + d) - eval_potential(spec, mid - d)) > tol) {
      return false;
    }
  }
  return true;
}

}  // namespace

double eval_potential(const PotentialSpec& spec, double x) {
  return std::visit(
      overloaded{
          [&](const GaussianPotential& p) {
            const double t = x / p.width;
            return p.V0 * std::exp(-t * t);
          },
          [&](const ShiftedGaussianPotential& p) {
            const double t = x - p.mu;
            return p.V0 * std::exp(-t * t);
          },
          [&](const PiecewiseGaussianPotential& p) {
            const double w = x <= 0.0 ? p.width_left : p.width_right;
            const double t = x / w;
            return p.V0 * std::exp(-t * t);
          },
          [&](const RectangularPotential& p) {
            return (x >= p.a && x <= p.b) ? p.V0 : 0.0;
          },
          [&](const TabulatedPotential& p) { return eval_tabulated(p, x); },
      },
      spec);
}

double eval_nonlinearity(const NonlinearitySpec& spec, double amplitude) {
  switch (spec.kind) {
    case NonlinearityKind::None:
      return 0.0;
    case NonlinearityKind::Kerr:
      return spec.gamma * amplitude * amplitude;
    case NonlinearityKind::Saturating:
      return spec.gamma / (1.0 + amplitude * amplitude);
  }
  return 0.0;
}

bool is_linear(const NonlinearitySpec& spec) {
  return spec.kind == NonlinearityKind::None || spec.gamma == 0.0;
}

bool is_symmetric(const PotentialSpec& spec, const ConfinementGeometry& geometry) {
  const bool two_sided = is_two_sided(geometry);
  const double L = confinement_length(geometry);
  const double mid = two_sided ? 0.0 : 0.5 * L;

  return std::visit(
      overloaded{
          [&](const GaussianPotential& p) { return p.V0 == 0.0 || mid == 0.0; },
          [&](const ShiftedGaussianPotential& p) { return p.V0 == 0.0 || p.mu == mid; },
          [&](const PiecewiseGaussianPotential& p) {
            // the joint sits at x = 0; on [0, L] only the right branch is
            // ever seen and it is not even about L/2
            return p.V0 == 0.0 || (two_sided && p.width_left == p.width_right);
          },
          [&](const RectangularPotential& p) { return p.V0 == 0.0 || p.a + p.b == 2.0 * mid; },
          [&](const TabulatedPotential&) {
            const double lo = two_sided ? -L : 0.0;
            return sampled_symmetric(spec, lo, L);
          },
      },
      spec);
}

double confinement_length(const ConfinementGeometry& geometry) {
  return std::visit([](const auto& g) { return g.L; }, geometry);
}

bool is_two_sided(const ConfinementGeometry& geometry) {
  return std::holds_alternative<SymmetricInterval>(geometry);
}

void validate(const PotentialSpec& spec) {
  std::visit(overloaded{
                 [](const GaussianPotential& p) {
                   if (!std::isfinite(p.V0)) throw ConfigError("potential.V0 must be finite");
                   if (!(p.width > 0.0) || !std::isfinite(p.width)) {
                     throw ConfigError("potential.width must be a finite positive number");
                   }
                 },
                 [](const ShiftedGaussianPotential& p) {
                   if (!std::isfinite(p.V0)) throw ConfigError("potential.V0 must be finite");
                   if (!std::isfinite(p.mu)) throw ConfigError("potential.mu must be finite");
                 },
                 [](const PiecewiseGaussianPotential& p) {
                   if (!std::isfinite(p.V0)) throw ConfigError("potential.V0 must be finite");
                   if (!(p.width_left > 0.0) || !std::isfinite(p.width_left)) {
                     throw ConfigError("potential.width_left must be a finite positive number");
                   }
                   if (!(p.width_right > 0.0) || !std::isfinite(p.width_right)) {
                     throw ConfigError("potential.width_right must be a finite positive number");
                   }
                 },
                 [](const RectangularPotential& p) {
                   if (!std::isfinite(p.V0)) throw ConfigError("potential.V0 must be finite");
                   if (!std::isfinite(p.a) || !std::isfinite(p.b) || !(p.a < p.b)) {
                     throw ConfigError("potential.a must be less than potential.b");
                   }
                 },
                 [](const TabulatedPotential& p) {
                   if (p.samples.size() < 2) {
                     throw ConfigError("potential.samples needs at least two entries");
                   }
                   for (size_t i = 0; i < p.samples.size(); ++i) {
                     const auto& [x, v] = p.samples[i];
                     if (!std::isfinite(x) || !std::isfinite(v)) {
                       throw ConfigError("potential.samples entries must be finite");
                     }
                     if (i > 0 && !(p.samples[i - 1].first < x)) {
                       throw ConfigError("potential.samples must be strictly increasing in x");
                     }
                   }
                 },
             },
             spec);
}

void validate(const NonlinearitySpec& spec) {
  if (!std::isfinite(spec.gamma)) throw ConfigError("nonlinearity.gamma must be finite");
  if (spec.kind != NonlinearityKind::None && spec.gamma < 0.0) {
    throw ConfigError("nonlinearity.gamma must be non-negative");
  }
}

void validate(const ConfinementGeometry& geometry) {
  const double L = confinement_length(geometry);
  if (!(L > 0.0) || !std::isfinite(L)) {
    throw ConfigError("geometry.L must be a finite positive number");
  }
}

}  // namespace nls

#include "nls/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "nls/errors.hpp"

namespace nls {

namespace {

constexpr double kConvergenceShift = 1e-7;
constexpr double kHoldsBelow = 1e-6;
constexpr double kViolatedAbove = 1e-3;

std::vector<double> energy_grid(const SweepSpec& spec) {
  std::vector<double> grid(static_cast<size_t>(spec.n_points));
  const int n = spec.n_points;
  if (spec.grid == GridSpacing::Linear) {
    for (int i = 0; i < n; ++i) {
      grid[static_cast<size_t>(i)] =
          spec.e_min + (spec.e_max - spec.e_min) * static_cast<double>(i) / (n - 1);
    }
  } else {
    const double lo = std::log(spec.e_min);
    const double hi = std::log(spec.e_max);
    for (int i = 0; i < n; ++i) {
      grid[static_cast<size_t>(i)] = std::exp(lo + (hi - lo) * static_cast<double>(i) / (n - 1));
    }
  }
  grid.front() = spec.e_min;
  grid.back() = spec.e_max;
  return grid;
}

SweepRow compute_row(const SweepSpec& spec, double E) {
  SweepRow row;
  row.E = E;
  try {
    row.result = scatter_at_energy(spec.config, E);
    if (spec.verify_convergence) {
      ScatterConfig refined = spec.config;
      refined.integrator = tightened(spec.config.integrator);
      const ScatteringResult check = scatter_at_energy(refined, E);
      const double shift = std::max(
          {std::abs(check.R_left - row.result.R_left), std::abs(check.R_right - row.result.R_right),
           std::abs(check.T_left - row.result.T_left),
           std::abs(check.T_right - row.result.T_right)});
      row.converged = shift < kConvergenceShift;
    }
  } catch (const Error& e) {
    row.error = e.what();
    row.converged = false;
    const double nan = std::nan("");
    row.result = {};
    row.result.k = std::sqrt(E);
    row.result.R_left = row.result.R_right = nan;
    row.result.T_left = row.result.T_right = nan;
    row.result.sum_left = row.result.sum_right = nan;
    row.result.endpoint.W1 = row.result.endpoint.W2 = nan;
  }
  return row;
}

SweepSummary summarize(const std::vector<SweepRow>& rows, bool two_sided) {
  SweepSummary s;
  if (two_sided) s.max_wronskian_split = 0.0;
  for (const SweepRow& row : rows) {
    if (!row.ok()) {
      ++s.failed_points;
      continue;
    }
    const ScatteringResult& r = row.result;
    s.max_refl_asym = std::max(s.max_refl_asym, std::abs(r.R_left - r.R_right));
    s.max_trans_asym = std::max(s.max_trans_asym, std::abs(r.T_left - r.T_right));
    s.max_unitarity_left = std::max(s.max_unitarity_left, std::abs(r.sum_left - 1.0));
    s.max_unitarity_right = std::max(s.max_unitarity_right, std::abs(r.sum_right - 1.0));
    if (two_sided) {
      s.max_wronskian_split =
          std::max(*s.max_wronskian_split, std::abs(r.endpoint.W1 - r.endpoint.W2));
    }
  }
  return s;
}

std::string format_measured(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

}  // namespace

double convergence_shift_threshold() { return kConvergenceShift; }

void validate(const SweepSpec& spec) {
  validate(spec.config);
  if (!(spec.e_min > 0.0) || !std::isfinite(spec.e_min)) {
    throw ConfigError("grid.e_min must be a finite positive number");
  }
  if (!(spec.e_min < spec.e_max) || !std::isfinite(spec.e_max)) {
    throw ConfigError("grid.e_min must be less than grid.e_max");
  }
  if (spec.n_points < 2) throw ConfigError("grid.n_points must be at least 2");
  const double e_floor = k_min_wavenumber * k_min_wavenumber;
  if (spec.e_min < e_floor) {
    throw ConfigError("grid.e_min must be at least " + std::to_string(e_floor) +
                      " (minimum supported wavenumber squared)");
  }
  if (spec.threads < 0) throw ConfigError("threads must be non-negative");
}

SweepTable run_sweep(const SweepSpec& spec) {
  validate(spec);
  const std::vector<double> grid = energy_grid(spec);
  const size_t n = grid.size();

  SweepTable table;
  table.rows.resize(n);

  // Every row is an independent pure computation written to its own slot,
  // so any work order yields the same bits.
  unsigned workers = spec.threads > 0 ? static_cast<unsigned>(spec.threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(n));

  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      table.rows[i] = compute_row(spec, grid[i]);
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  table.summary = summarize(table.rows, is_two_sided(spec.config.geometry));
  if (table.summary.failed_points == static_cast<int>(n)) {
    throw TotalSweepFailure("every sweep point failed; first error: " + table.rows.front().error);
  }
  return table;
}

TheoremReport theorem_report(const SweepTable& table, const ScatterConfig& cfg) {
  if (table.rows.empty()) throw ConfigError("theorem_report needs a non-empty table");

  const bool two_sided = is_two_sided(cfg.geometry);
  const bool symmetric = is_symmetric(cfg.potential, cfg.geometry);
  const bool linear = is_linear(cfg.nonlinearity);

  TheoremReport rep;
  rep.linear = linear;
  rep.regime = two_sided ? (symmetric ? 1 : 2) : (symmetric ? 3 : 4);
  {
    std::ostringstream os;
    os << (two_sided ? "confinement on [-L, L]" : "confinement on [0, L]") << ", "
       << (symmetric ? "symmetric" : "asymmetric") << " potential"
       << (linear ? " (linear run)" : "");
    rep.description = os.str();
  }

  // expected behaviour per regime; a linear run keeps every property intact
  bool expect_R = true, expect_T = true, expect_U = true;
  if (!linear) {
    switch (rep.regime) {
      case 1: break;
      case 2: expect_T = false; expect_U = false; break;
      case 3: expect_U = false; break;
      case 4: expect_R = false; expect_T = false; expect_U = false; break;
    }
  }

  const SweepSummary& s = table.summary;
  const double unitarity = std::max(s.max_unitarity_left, s.max_unitarity_right);
  auto judge = [](const std::string& name, bool expected_hold, double measured) {
    PropertyCheck c;
    c.name = name;
    c.expected_to_hold = expected_hold;
    c.measured = measured;
    const bool holds = measured < kHoldsBelow;
    const bool violated = measured > kViolatedAbove;
    if (!holds && !violated) {
      c.verdict = "INCONCLUSIVE";
      c.as_expected = false;
    } else if (holds == expected_hold) {
      c.verdict = expected_hold ? "PASS" : "FAIL-as-expected";
      c.as_expected = true;
    } else {
      c.verdict = "UNEXPECTED";
      c.as_expected = false;
    }
    return c;
  };

  rep.checks.push_back(judge("reflection reciprocity", expect_R, s.max_refl_asym));
  rep.checks.push_back(judge("transmission reciprocity", expect_T, s.max_trans_asym));
  rep.checks.push_back(judge("unitarity", expect_U, unitarity));
  rep.all_as_expected = std::all_of(rep.checks.begin(), rep.checks.end(),
                                    [](const PropertyCheck& c) { return c.as_expected; });
  return rep;
}

std::string to_string(const TheoremReport& rep) {
  std::ostringstream os;
  os << "regime " << rep.regime << ": " << rep.description << "\n";
  for (const PropertyCheck& c : rep.checks) {
    os << "  " << c.name;
    for (size_t pad = c.name.size(); pad < 26; ++pad) os << ' ';
    os << "expected " << (c.expected_to_hold ? "HOLDS    " : "VIOLATED ") << " max "
       << format_measured(c.measured) << "  " << c.verdict << "\n";
  }
  os << "  verdict: " << (rep.all_as_expected ? "behaviour matches expectations"
                                              : "behaviour does NOT match expectations")
     << "\n";
  return os.str();
}

}  // namespace nls

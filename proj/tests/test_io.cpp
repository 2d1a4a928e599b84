#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "nls/config_io.hpp"
#include "nls/csv.hpp"
#include "nls/errors.hpp"
#include "nls/fixtures.hpp"

using namespace nls;

namespace {

const char* kFullConfig = R"({
  "potential": {"kind": "gaussian", "V0": -3.0, "width": 1.0},
  "nonlinearity": {"kind": "saturating", "gamma": 1.0},
  "geometry": {"kind": "symmetric", "L": 5.0},
  "integrator": {"mode": "adaptive", "abs_tol": 1e-10, "rel_tol": 1e-10, "max_steps": 1000000},
  "grid": {"e_min": 0.1, "e_max": 10.0, "n_points": 200, "spacing": "linear"},
  "verify_convergence": false,
  "annotate_theorems": true,
  "out": "fig1.csv"
})";

}  // namespace

TEST_CASE("a full config document parses into the expected spec") {
  const RunConfig cfg = parse_run_config(kFullConfig);
  const auto& g = std::get<GaussianPotential>(cfg.sweep.config.potential);
  CHECK(g.V0 == -3.0);
  CHECK(g.width == 1.0);
  CHECK(cfg.sweep.config.nonlinearity.kind == NonlinearityKind::Saturating);
  CHECK(cfg.sweep.config.nonlinearity.gamma == 1.0);
  CHECK(is_two_sided(cfg.sweep.config.geometry));
  CHECK(confinement_length(cfg.sweep.config.geometry) == 5.0);
  CHECK(cfg.sweep.n_points == 200);
  CHECK(cfg.sweep.annotate_theorems);
  REQUIRE(cfg.out.has_value());
  CHECK(*cfg.out == "fig1.csv");
}

TEST_CASE("config round-trips through its canonical JSON form") {
  const RunConfig cfg = parse_run_config(kFullConfig);
  const RunConfig again = parse_run_config(to_json_string(cfg));
  CHECK(to_json_string(cfg) == to_json_string(again));
}

TEST_CASE("unknown keys are rejected with their path") {
  const char* bad = R"({
    "potential": {"kind": "gaussian", "V0": -3.0, "wobble": 2},
    "nonlinearity": {"kind": "none"},
    "geometry": {"kind": "symmetric", "L": 5.0}
  })";
  CHECK_THROWS_WITH_AS(parse_run_config(bad), doctest::Contains("wobble"), ConfigError);

  const char* top = R"({
    "potential": {"kind": "gaussian", "V0": -3.0},
    "nonlinearity": {"kind": "none"},
    "geometry": {"kind": "symmetric", "L": 5.0},
    "grdi": {}
  })";
  CHECK_THROWS_WITH_AS(parse_run_config(top), doctest::Contains("grdi"), ConfigError);
}

TEST_CASE("validation failures name the offending key") {
  const char* negative_emin = R"({
    "potential": {"kind": "gaussian", "V0": -3.0},
    "nonlinearity": {"kind": "none"},
    "geometry": {"kind": "symmetric", "L": 5.0},
    "grid": {"e_min": -1.0}
  })";
  CHECK_THROWS_WITH_AS(parse_run_config(negative_emin), doctest::Contains("e_min"), ConfigError);

  const char* negative_gamma = R"({
    "potential": {"kind": "gaussian", "V0": -3.0},
    "nonlinearity": {"kind": "saturating", "gamma": -0.5},
    "geometry": {"kind": "symmetric", "L": 5.0}
  })";
  CHECK_THROWS_WITH_AS(parse_run_config(negative_gamma), doctest::Contains("gamma"), ConfigError);

  const char* missing = R"({
    "potential": {"kind": "gaussian", "V0": -3.0},
    "geometry": {"kind": "symmetric", "L": 5.0}
  })";
  CHECK_THROWS_WITH_AS(parse_run_config(missing), doctest::Contains("nonlinearity"), ConfigError);

  CHECK_THROWS_AS(parse_run_config("{not json"), ConfigError);
}

TEST_CASE("tabulated potentials load from sample pairs") {
  const char* tab = R"({
    "potential": {"kind": "tabulated", "samples": [[-5.0, 0.0], [0.0, -2.0], [5.0, 0.0]]},
    "nonlinearity": {"kind": "none"},
    "geometry": {"kind": "symmetric", "L": 5.0}
  })";
  const RunConfig cfg = parse_run_config(tab);
  const auto& t = std::get<TabulatedPotential>(cfg.sweep.config.potential);
  REQUIRE(t.samples.size() == 3);
  CHECK(eval_potential(cfg.sweep.config.potential, -2.5) == doctest::Approx(-1.0));
}

TEST_CASE("significant-digit formatting is locale-independent text") {
  CHECK(format_significant(0.5) == "0.5");
  CHECK(format_significant(1.0) == "1");
  CHECK(format_significant(-3.0) == "-3");
  CHECK(format_significant(1.0 / 3.0) == "0.333333333333");
  CHECK(format_significant(123456789012345.0) == "1.23456789012e+14");
  CHECK(format_significant(std::nan("")) == "nan");
}

TEST_CASE("csv header is frozen") {
  CHECK(std::string(kCsvHeader) ==
        "E,k,R_left,R_right,T_left,T_right,sum_left,sum_right,W1,W2,converged");
}

TEST_CASE("csv round-trips to the printed precision") {
  SweepSpec spec = figure_fixture(4).sweep;
  spec.n_points = 6;
  spec.verify_convergence = false;
  const SweepTable table = run_sweep(spec);
  const std::string text = csv_string(table, false);

  std::istringstream in(text);
  const std::vector<CsvRow> rows = read_csv(in);
  REQUIRE(rows.size() == table.rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    const SweepRow& orig = table.rows[i];
    const CsvRow& got = rows[i];
    CHECK(!got.W2.has_value());  // half interval leaves W2 empty
    CHECK(got.E == doctest::Approx(orig.E).epsilon(1e-11));
    CHECK(got.R_left == doctest::Approx(orig.result.R_left).epsilon(1e-11));
    CHECK(got.T_right == doctest::Approx(orig.result.T_right).epsilon(1e-11));
    CHECK(got.sum_left == doctest::Approx(orig.result.sum_left).epsilon(1e-11));
    CHECK(got.W1 == doctest::Approx(orig.result.endpoint.W1).epsilon(1e-11));
    CHECK(got.converged == orig.converged);
  }

  // two-sided tables round-trip W2 as a number
  SweepSpec two = figure_fixture(1).sweep;
  two.n_points = 4;
  two.verify_convergence = false;
  const SweepTable t2 = run_sweep(two);
  std::istringstream in2(csv_string(t2, true));
  const std::vector<CsvRow> rows2 = read_csv(in2);
  REQUIRE(rows2.size() == 4);
  for (const CsvRow& row : rows2) CHECK(row.W2.has_value());
}

TEST_CASE("failed rows round-trip as nan") {
  SweepTable table;
  SweepRow row;
  row.E = 2.0;
  row.error = "step limit";
  row.converged = false;
  row.result.k = std::sqrt(2.0);
  row.result.R_left = row.result.R_right = std::nan("");
  row.result.T_left = row.result.T_right = std::nan("");
  row.result.sum_left = row.result.sum_right = std::nan("");
  row.result.endpoint.W1 = row.result.endpoint.W2 = std::nan("");
  table.rows.push_back(row);

  std::istringstream in(csv_string(table, true));
  const std::vector<CsvRow> rows = read_csv(in);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].E == 2.0);
  CHECK(std::isnan(rows[0].R_left));
  CHECK(std::isnan(*rows[0].W2));
  CHECK(!rows[0].converged);
}

TEST_CASE("tabulated potentials survive the JSON writer") {
  const char* tab = R"({
    "potential": {"kind": "tabulated", "samples": [[-5.0, 0.0], [0.0, -2.0], [5.0, 0.0]]},
    "nonlinearity": {"kind": "none"},
    "geometry": {"kind": "symmetric", "L": 5.0}
  })";
  const RunConfig cfg = parse_run_config(tab);
  const RunConfig again = parse_run_config(to_json_string(cfg));
  const auto& t = std::get<TabulatedPotential>(again.sweep.config.potential);
  REQUIRE(t.samples.size() == 3);
  CHECK(t.samples[1].first == 0.0);
  CHECK(t.samples[1].second == -2.0);
}

TEST_CASE("csv reader rejects malformed input") {
  std::istringstream bad_header("nope\n1,2\n");
  CHECK_THROWS_AS(read_csv(bad_header), ConfigError);
  std::istringstream short_row(std::string(kCsvHeader) + "\n1,2,3\n");
  CHECK_THROWS_AS(read_csv(short_row), ConfigError);
  std::istringstream bad_bool(std::string(kCsvHeader) + "\n1,1,0,0,1,1,1,1,1,1,maybe\n");
  CHECK_THROWS_AS(read_csv(bad_bool), ConfigError);
}

TEST_CASE("figure fixtures are frozen to their defining parameters") {
  CHECK_THROWS_AS(figure_fixture(0), ConfigError);
  CHECK_THROWS_AS(figure_fixture(9), ConfigError);

  for (int n = 1; n <= 5; ++n) {
    const RunConfig cfg = figure_fixture(n);
    CHECK(cfg.sweep.e_min == 0.1);
    CHECK(cfg.sweep.e_max == 10.0);
    CHECK(cfg.sweep.n_points == 200);
    CHECK(cfg.sweep.config.nonlinearity.gamma == 1.0);
    CHECK(confinement_length(cfg.sweep.config.geometry) == 5.0);
  }

  const auto& f1 = std::get<GaussianPotential>(figure_fixture(1).sweep.config.potential);
  CHECK(f1.V0 == -3.0);
  CHECK(f1.width == 1.0);
  CHECK(figure_fixture(1).sweep.config.nonlinearity.kind == NonlinearityKind::Saturating);

  const auto& f2 = std::get<PiecewiseGaussianPotential>(figure_fixture(2).sweep.config.potential);
  CHECK(f2.V0 == -3.0);
  CHECK(f2.width_left == 1.0);
  CHECK(f2.width_right == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-15));
  CHECK(figure_fixture(3).sweep.config.nonlinearity.kind == NonlinearityKind::Kerr);

  const auto& f4 = std::get<ShiftedGaussianPotential>(figure_fixture(4).sweep.config.potential);
  CHECK(f4.V0 == 3.0);
  CHECK(f4.mu == 2.5);
  CHECK(!is_two_sided(figure_fixture(4).sweep.config.geometry));

  const auto& f5 = std::get<ShiftedGaussianPotential>(figure_fixture(5).sweep.config.potential);
  CHECK(f5.mu == 2.0);
}

// nls-scatter: reflection/transmission spectra for plane waves hitting a
// confined real potential with confined nonlinearity, for both confinement
// geometries ([-L, L] and [0, L]).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nls/config_io.hpp"
#include "nls/csv.hpp"
#include "nls/errors.hpp"
#include "nls/fixtures.hpp"
#include "nls/verify.hpp"

namespace {

void print_summary(const nls::SweepTable& table) {
  const nls::SweepSummary& s = table.summary;
  std::cout << "summary:\n"
            << "  max |R_left - R_right|  = " << nls::format_significant(s.max_refl_asym) << "\n"
            << "  max |T_left - T_right|  = " << nls::format_significant(s.max_trans_asym) << "\n"
            << "  max |R+T - 1| (left)    = " << nls::format_significant(s.max_unitarity_left)
            << "\n"
            << "  max |R+T - 1| (right)   = " << nls::format_significant(s.max_unitarity_right)
            << "\n";
  if (s.max_wronskian_split) {
    std::cout << "  max |W1 - W2|           = " << nls::format_significant(*s.max_wronskian_split)
              << "\n";
  }
  if (s.failed_points > 0) {
    std::cout << "  failed points           = " << s.failed_points << "\n";
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw nls::ConfigError("cannot open output file '" + path + "'");
  out << content;
  if (!out) throw nls::ConfigError("failed writing output file '" + path + "'");
}

std::string plot_script(int n) {
  std::string s;
  s += "#!/usr/bin/env python3\n";
  s += "\"\"\"Render R, T and R+T panels from the sweep CSV next to this script.\"\"\"\n";
  s += "import csv\n";
  s += "import os\n";
  s += "\n";
  s += "import matplotlib.pyplot as plt\n";
  s += "\n";
  s += "here = os.path.dirname(os.path.abspath(__file__))\n";
  s += "rows = list(csv.DictReader(open(os.path.join(here, 'fig" + std::to_string(n) +
       ".csv'))))\n";
  s += "E = [float(r['E']) for r in rows]\n";
  s += "panels = [\n";
  s += "    ('R', 'R_left', 'R_right'),\n";
  s += "    ('T', 'T_left', 'T_right'),\n";
  s += "    ('R+T', 'sum_left', 'sum_right'),\n";
  s += "]\n";
  s += "fig, axes = plt.subplots(1, 3, figsize=(12, 3.6))\n";
  s += "for ax, (label, left, right) in zip(axes, panels):\n";
  s += "    ax.plot(E, [float(r[left]) for r in rows], 'b-', lw=2, label='left incidence')\n";
  s += "    ax.plot(E, [float(r[right]) for r in rows], 'r-', lw=0.9, label='right incidence')\n";
  s += "    ax.set_xlabel('E')\n";
  s += "    ax.set_ylabel(label)\n";
  s += "    if label == 'R+T':\n";
  s += "        ax.axhline(1.0, color='gray', lw=0.5, ls='--')\n";
  s += "axes[0].legend()\n";
  s += "fig.tight_layout()\n";
  s += "fig.savefig(os.path.join(here, 'fig" + std::to_string(n) + ".png'), dpi=160)\n";
  s += "print('wrote fig" + std::to_string(n) + ".png')\n";
  return s;
}

int run_sweep_command(const std::string& config_path, std::string out_path, int threads) {
  const nls::RunConfig cfg = nls::load_run_config(config_path);
  if (out_path.empty()) {
    if (!cfg.out) {
      throw nls::ConfigError("no output path: pass --out or set 'out' in the config");
    }
    out_path = *cfg.out;
  }
  nls::SweepSpec spec = cfg.sweep;
  spec.threads = threads;
  const nls::SweepTable table = nls::run_sweep(spec);
  write_file(out_path, nls::csv_string(table, nls::is_two_sided(spec.config.geometry)));
  std::cout << "wrote " << out_path << " (" << table.rows.size() << " rows)\n";
  print_summary(table);
  if (spec.annotate_theorems) {
    std::cout << nls::to_string(nls::theorem_report(table, spec.config));
  }
  return 0;
}

int run_figure_command(int n, const std::string& out_dir, bool show_config, int threads) {
  const nls::RunConfig cfg = nls::figure_fixture(n);
  if (show_config) {
    std::cout << nls::to_json_string(cfg) << "\n";
    return 0;
  }
  std::filesystem::create_directories(out_dir);
  nls::SweepSpec spec = cfg.sweep;
  spec.threads = threads;
  const nls::SweepTable table = nls::run_sweep(spec);

  const std::string csv_path = out_dir + "/fig" + std::to_string(n) + ".csv";
  write_file(csv_path, nls::csv_string(table, nls::is_two_sided(spec.config.geometry)));
  const std::string py_path = out_dir + "/fig" + std::to_string(n) + "_plot.py";
  write_file(py_path, plot_script(n));

  std::cout << "wrote " << csv_path << " and " << py_path << "\n";
  print_summary(table);
  std::cout << nls::to_string(nls::theorem_report(table, spec.config));
  return 0;
}

int run_point_command(const std::string& config_path, double energy) {
  const nls::RunConfig cfg = nls::load_run_config(config_path);
  const nls::ScatteringResult res = nls::scatter_at_energy(cfg.sweep.config, energy);
  const bool two_sided = nls::is_two_sided(cfg.sweep.config.geometry);

  auto amp = [](const std::complex<double>& z) {
    return nls::format_significant(z.real()) + (z.imag() < 0 ? " - " : " + ") +
           nls::format_significant(std::abs(z.imag())) + "i";
  };
  std::cout << "E        = " << nls::format_significant(energy) << "\n"
            << "k        = " << nls::format_significant(res.k) << "\n"
            << "r_left   = " << amp(res.r_left) << "\n"
            << "r_right  = " << amp(res.r_right) << "\n"
            << "t_left   = " << amp(res.t_left) << "\n"
            << "t_right  = " << amp(res.t_right) << "\n"
            << "R_left   = " << nls::format_significant(res.R_left) << "\n"
            << "R_right  = " << nls::format_significant(res.R_right) << "\n"
            << "T_left   = " << nls::format_significant(res.T_left) << "\n"
            << "T_right  = " << nls::format_significant(res.T_right) << "\n"
            << "R+T left = " << nls::format_significant(res.sum_left) << "\n"
            << "R+T right= " << nls::format_significant(res.sum_right) << "\n"
            << "W1       = " << nls::format_significant(res.endpoint.W1) << "\n";
  if (two_sided) {
    std::cout << "W2       = " << nls::format_significant(res.endpoint.W2) << "\n";
  }
  return 0;
}

int run_verify_command(bool gamma_zero) {
  nls::VerifyOptions opt;
  opt.gamma_zero = gamma_zero;
  // test-only override of the adaptive tolerances
  if (const char* env = std::getenv("NLS_SEED_TOL")) {
    try {
      opt.tolerance_override = std::stod(env);
    } catch (const std::exception&) {
      throw nls::ConfigError("NLS_SEED_TOL must be a number, got '" + std::string(env) + "'");
    }
  }
  const auto results = nls::run_verification(opt);
  std::cout << nls::format_verification_report(results);
  return nls::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scattering spectra of the one-dimensional nonlinear field equation "
               "with confined potential and nonlinearity"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string out_dir = ".";
  int figure_n = 0;
  double energy = 0.0;
  bool show_config = false;
  bool gamma_zero = false;
  int threads = 0;

  CLI::App* sweep = app.add_subcommand("sweep", "run an energy sweep from a JSON config");
  sweep->add_option("--config", config_path, "JSON config path")->required();
  sweep->add_option("--out", out_path, "output CSV path (overrides 'out' in the config)");
  sweep->add_option("--threads", threads, "worker threads (0 = auto)");

  CLI::App* figure = app.add_subcommand("figure", "run a built-in fixture and emit CSV + plot script");
  figure->add_option("n", figure_n, "fixture number (1-5)")->required();
  figure->add_option("--out-dir", out_dir, "output directory");
  figure->add_flag("--show-config", show_config, "print the fixture config as JSON and exit");
  figure->add_option("--threads", threads, "worker threads (0 = auto)");

  CLI::App* point = app.add_subcommand("point", "evaluate a single energy from a JSON config");
  point->add_option("--config", config_path, "JSON config path")->required();
  point->add_option("--energy", energy, "energy E = k^2")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the numerical self-check battery");
  verify->add_flag("--gamma-zero", gamma_zero, "force gamma = 0 and check unitarity everywhere");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sweep->parsed()) return run_sweep_command(config_path, out_path, threads);
    if (figure->parsed()) return run_figure_command(figure_n, out_dir, show_config, threads);
    if (point->parsed()) return run_point_command(config_path, energy);
    if (verify->parsed()) return run_verify_command(gamma_zero);
  } catch (const nls::TotalSweepFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const nls::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nls::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

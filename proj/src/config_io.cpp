#include "nls/config_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nls/errors.hpp"

namespace nls {

namespace {

using Json = nlohmann::ordered_json;

// Tracks which keys of an object were consumed so leftovers can be
// rejected with their full path.
class StrictObject {
 public:
  StrictObject(const Json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_ + ": expected an object");
  }

  const Json* optional(const std::string& key) {
    used_.insert(key);
    const auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  const Json& require(const std::string& key) {
    const Json* v = optional(key);
    if (!v) throw ConfigError(path_ + ": missing required key '" + key + "'");
    return *v;
  }

  void reject_unknown() const {
    for (const auto& [key, value] : j_.items()) {
      if (!used_.count(key)) throw ConfigError(path_ + ": unknown key '" + key + "'");
    }
  }

  std::string sub(const std::string& key) const { return path_ + "." + key; }

 private:
  const Json& j_;
  std::string path_;
  std::set<std::string> used_;
};

double as_number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path + ": expected a number");
  return j.get<double>();
}

int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ConfigError(path + ": expected an integer");
  return j.get<int>();
}

bool as_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) throw ConfigError(path + ": expected a boolean");
  return j.get<bool>();
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigError(path + ": expected a string");
  return j.get<std::string>();
}

PotentialSpec parse_potential(const Json& j, const std::string& path) {
  StrictObject o(j, path);
  const std::string kind = as_string(o.require("kind"), o.sub("kind"));
  PotentialSpec spec;
  if (kind == "gaussian") {
    GaussianPotential p;
    p.V0 = as_number(o.require("V0"), o.sub("V0"));
    if (const Json* w = o.optional("width")) p.width = as_number(*w, o.sub("width"));
    spec = p;
  } else if (kind == "shifted_gaussian") {
    ShiftedGaussianPotential p;
    p.V0 = as_number(o.require("V0"), o.sub("V0"));
    p.mu = as_number(o.require("mu"), o.sub("mu"));
    spec = p;
  } else if (kind == "piecewise_gaussian") {
    PiecewiseGaussianPotential p;
    p.V0 = as_number(o.require("V0"), o.sub("V0"));
    p.width_left = as_number(o.require("width_left"), o.sub("width_left"));
    p.width_right = as_number(o.require("width_right"), o.sub("width_right"));
    spec = p;
  } else if (kind == "rectangular") {
    RectangularPotential p;
    p.V0 = as_number(o.require("V0"), o.sub("V0"));
    p.a = as_number(o.require("a"), o.sub("a"));
    p.b = as_number(o.require("b"), o.sub("b"));
    spec = p;
  } else if (kind == "tabulated") {
    TabulatedPotential p;
    const Json& samples = o.require("samples");
    if (!samples.is_array()) throw ConfigError(o.sub("samples") + ": expected an array");
    for (const Json& entry : samples) {
      if (!entry.is_array() || entry.size() != 2) {
        throw ConfigError(o.sub("samples") + ": each entry must be an [x, V] pair");
      }
      p.samples.emplace_back(as_number(entry[0], o.sub("samples")),
                             as_number(entry[1], o.sub("samples")));
    }
    spec = p;
  } else {
    throw ConfigError(o.sub("kind") + ": unknown potential kind '" + kind + "'");
  }
  o.reject_unknown();
  return spec;
}

NonlinearitySpec parse_nonlinearity(const Json& j, const std::string& path) {
  StrictObject o(j, path);
  const std::string kind = as_string(o.require("kind"), o.sub("kind"));
  NonlinearitySpec spec;
  if (kind == "none") {
    spec.kind = NonlinearityKind::None;
    if (const Json* g = o.optional("gamma")) spec.gamma = as_number(*g, o.sub("gamma"));
  } else if (kind == "kerr" || kind == "saturating") {
    spec.kind = kind == "kerr" ? NonlinearityKind::Kerr : NonlinearityKind::Saturating;
    spec.gamma = as_number(o.require("gamma"), o.sub("gamma"));
  } else {
    throw ConfigError(o.sub("kind") + ": unknown nonlinearity kind '" + kind + "'");
  }
  o.reject_unknown();
  return spec;
}

ConfinementGeometry parse_geometry(const Json& j, const std::string& path) {
  StrictObject o(j, path);
  const std::string kind = as_string(o.require("kind"), o.sub("kind"));
  const double L = as_number(o.require("L"), o.sub("L"));
  o.reject_unknown();
  if (kind == "symmetric") return SymmetricInterval{L};
  if (kind == "half_interval") return HalfInterval{L};
  throw ConfigError(o.sub("kind") + ": unknown geometry kind '" + kind + "'");
}

IntegratorConfig parse_integrator(const Json& j, const std::string& path) {
  StrictObject o(j, path);
  IntegratorConfig cfg;
  if (const Json* m = o.optional("mode")) {
    const std::string mode = as_string(*m, o.sub("mode"));
    if (mode == "adaptive") {
      cfg.mode = StepMode::Adaptive;
    } else if (mode == "fixed_step") {
      cfg.mode = StepMode::FixedStep;
    } else {
      throw ConfigError(o.sub("mode") + ": unknown mode '" + mode + "'");
    }
  }
  if (const Json* v = o.optional("step")) cfg.step = as_number(*v, o.sub("step"));
  if (const Json* v = o.optional("abs_tol")) cfg.abs_tol = as_number(*v, o.sub("abs_tol"));
  if (const Json* v = o.optional("rel_tol")) cfg.rel_tol = as_number(*v, o.sub("rel_tol"));
  if (const Json* v = o.optional("max_steps")) cfg.max_steps = as_int(*v, o.sub("max_steps"));
  o.reject_unknown();
  return cfg;
}

void parse_grid(const Json& j, const std::string& path, SweepSpec& spec) {
  StrictObject o(j, path);
  if (const Json* v = o.optional("e_min")) spec.e_min = as_number(*v, o.sub("e_min"));
  if (const Json* v = o.optional("e_max")) spec.e_max = as_number(*v, o.sub("e_max"));
  if (const Json* v = o.optional("n_points")) spec.n_points = as_int(*v, o.sub("n_points"));
  if (const Json* v = o.optional("spacing")) {
    const std::string spacing = as_string(*v, o.sub("spacing"));
    if (spacing == "linear") {
      spec.grid = GridSpacing::Linear;
    } else if (spacing == "log") {
      spec.grid = GridSpacing::Log;
    } else {
      throw ConfigError(o.sub("spacing") + ": unknown spacing '" + spacing + "'");
    }
  }
  o.reject_unknown();
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }

  StrictObject o(j, "config");
  RunConfig cfg;
  cfg.sweep.config.potential = parse_potential(o.require("potential"), "config.potential");
  cfg.sweep.config.nonlinearity =
      parse_nonlinearity(o.require("nonlinearity"), "config.nonlinearity");
  cfg.sweep.config.geometry = parse_geometry(o.require("geometry"), "config.geometry");
  if (const Json* v = o.optional("integrator")) {
    cfg.sweep.config.integrator = parse_integrator(*v, "config.integrator");
  }
  if (const Json* v = o.optional("grid")) parse_grid(*v, "config.grid", cfg.sweep);
  if (const Json* v = o.optional("verify_convergence")) {
    cfg.sweep.verify_convergence = as_bool(*v, "config.verify_convergence");
  }
  if (const Json* v = o.optional("annotate_theorems")) {
    cfg.sweep.annotate_theorems = as_bool(*v, "config.annotate_theorems");
  }
  if (const Json* v = o.optional("out")) cfg.out = as_string(*v, "config.out");
  o.reject_unknown();

  validate(cfg.sweep);
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str());
}

std::string to_json_string(const RunConfig& cfg) {
  Json j;

  Json pot;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GaussianPotential>) {
          pot["kind"] = "gaussian";
          pot["V0"] = p.V0;
          pot["width"] = p.width;
        } else if constexpr (std::is_same_v<T, ShiftedGaussianPotential>) {
          pot["kind"] = "shifted_gaussian";
          pot["V0"] = p.V0;
          pot["mu"] = p.mu;
        } else if constexpr (std::is_same_v<T, PiecewiseGaussianPotential>) {
          pot["kind"] = "piecewise_gaussian";
          pot["V0"] = p.V0;
          pot["width_left"] = p.width_left;
          pot["width_right"] = p.width_right;
        } else if constexpr (std::is_same_v<T, RectangularPotential>) {
          pot["kind"] = "rectangular";
          pot["V0"] = p.V0;
          pot["a"] = p.a;
          pot["b"] = p.b;
        } else {
          pot["kind"] = "tabulated";
          Json samples = Json::array();
          for (const auto& [x, v] : p.samples) samples.push_back({x, v});
          pot["samples"] = samples;
        }
      },
      cfg.sweep.config.potential);
  j["potential"] = pot;

  Json nl;
  switch (cfg.sweep.config.nonlinearity.kind) {
    case NonlinearityKind::None: nl["kind"] = "none"; break;
    case NonlinearityKind::Kerr: nl["kind"] = "kerr"; break;
    case NonlinearityKind::Saturating: nl["kind"] = "saturating"; break;
  }
  nl["gamma"] = cfg.sweep.config.nonlinearity.gamma;
  j["nonlinearity"] = nl;

  Json geom;
  geom["kind"] = is_two_sided(cfg.sweep.config.geometry) ? "symmetric" : "half_interval";
  geom["L"] = confinement_length(cfg.sweep.config.geometry);
  j["geometry"] = geom;

  Json integ;
  integ["mode"] = cfg.sweep.config.integrator.mode == StepMode::Adaptive ? "adaptive" : "fixed_step";
  integ["step"] = cfg.sweep.config.integrator.step;
  integ["abs_tol"] = cfg.sweep.config.integrator.abs_tol;
  integ["rel_tol"] = cfg.sweep.config.integrator.rel_tol;
  integ["max_steps"] = cfg.sweep.config.integrator.max_steps;
  j["integrator"] = integ;

  Json grid;
  grid["e_min"] = cfg.sweep.e_min;
  grid["e_max"] = cfg.sweep.e_max;
  grid["n_points"] = cfg.sweep.n_points;
  grid["spacing"] = cfg.sweep.grid == GridSpacing::Linear ? "linear" : "log";
  j["grid"] = grid;

  j["verify_convergence"] = cfg.sweep.verify_convergence;
  j["annotate_theorems"] = cfg.sweep.annotate_theorems;
  if (cfg.out) j["out"] = *cfg.out;

  return j.dump(2);
}

}  // namespace nls

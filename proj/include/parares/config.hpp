#pragma once

// Scenario configuration: JSON file with operator / nonlinearity / resonance /
// solver / output blocks, schema-checked with path-qualified errors, plus the
// two application presets.

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "parares/nonlinearity.hpp"
#include "parares/solver.hpp"
#include "parares/spectral.hpp"

namespace parares {

class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScenarioConfig {
  OperatorSpec op_spec;
  std::string coefficient_src = "1";
  NonlinearField field;
  std::string expr_src;
  std::optional<std::string> f_plus_src, f_minus_src;
  int k = 1;                      // index among distinct eigenvalues, 1-based
  std::optional<double> lambda;   // explicit eigenvalue target, overrides k
  double period = 1.0;
  double rank_tol = -1.0;         // negative: default 1e-8 (1+|lambda|)
  SolverConfig solver;
  int galerkin_dim = 2;
  double radius = -1.0;           // ball radius for degree; negative: sweep
  std::string out_dir = "out";
  nlohmann::json echo;            // fully resolved config for reproducibility
};

namespace detail {

inline const nlohmann::json* find(const nlohmann::json& j,
                                  const std::string& key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

template <class T>
T get_checked(const nlohmann::json& j, const std::string& path,
              const std::string& key, T fallback) {
  const nlohmann::json* v = find(j, key);
  if (!v) return fallback;
  try {
    return v->get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("config error at " + path + "/" + key +
                      ": wrong type (found " + std::string(v->type_name()) +
                      ")");
  }
}

inline Expression parse_expr_checked(const std::string& src,
                                     const std::string& path) {
  try {
    return parse_expression(src);
  } catch (const ParseError& e) {
    throw ConfigError("config error at " + path + ": " + e.what());
  }
}

inline void merge_patch(nlohmann::json& base, const nlohmann::json& patch) {
  base.merge_patch(patch);
}

}  // namespace detail

inline nlohmann::json preset_config(const std::string& name) {
  if (name == "neumann-laplacian") {
    // Laplacian with Neumann boundary conditions on (0, pi), resonance at
    // lambda_1 = 0 (constant kernel)
    return nlohmann::json{
        {"operator",
         {{"bc", "neumann"}, {"dimension", 1}, {"length", M_PI}, {"n", 64},
          {"a", "1"}}},
        {"nonlinearity",
         {{"expr", "atan(y) - 0.25"}, {"m", 1.9}, {"L", 1.0},
          {"f_plus", "pi/2 - 0.25"}, {"f_minus", "-pi/2 - 0.25"}}},
        {"resonance", {{"k", 1}, {"T", 1.0}}},
        {"solver", {}},
        {"output", {{"dir", "out"}}}};
  }
  if (name == "dirichlet-divergence") {
    // divergence-form operator -(a(x) u')' with Dirichlet conditions,
    // resonance at the second eigenvalue
    return nlohmann::json{
        {"operator",
         {{"bc", "dirichlet"}, {"dimension", 1}, {"length", M_PI}, {"n", 64},
          {"a", "1 + 0.25*cos(x)"}}},
        {"nonlinearity",
         {{"expr", "-atan(y)"}, {"m", 1.6}, {"L", 1.0},
          {"f_plus", "-pi/2"}, {"f_minus", "pi/2"}}},
        {"resonance", {{"k", 2}, {"T", 1.0}}},
        {"solver", {}},
        {"output", {{"dir", "out"}}}};
  }
  throw ConfigError("unknown preset '" + name +
                    "' (expected neumann-laplacian or dirichlet-divergence)");
}

inline ScenarioConfig scenario_from_json(const nlohmann::json& j) {
  using detail::get_checked;
  ScenarioConfig cfg;
  cfg.echo = j;

  const nlohmann::json op = j.value("operator", nlohmann::json::object());
  const std::string bc = get_checked<std::string>(op, "/operator", "bc",
                                                  "neumann");
  if (bc == "neumann") cfg.op_spec.bc = BoundaryCondition::Neumann;
  else if (bc == "dirichlet") cfg.op_spec.bc = BoundaryCondition::Dirichlet;
  else
    throw ConfigError(
        "config error at /operator/bc: expected \"neumann\" or \"dirichlet\"");
  cfg.op_spec.dim = get_checked<int>(op, "/operator", "dimension", 1);
  cfg.op_spec.length1 = get_checked<double>(op, "/operator", "length", M_PI);
  cfg.op_spec.length2 =
      get_checked<double>(op, "/operator", "length2", cfg.op_spec.length1);
  cfg.op_spec.n1 = get_checked<int>(op, "/operator", "n", 64);
  cfg.op_spec.n2 = get_checked<int>(op, "/operator", "n2", 0);
  cfg.coefficient_src = get_checked<std::string>(op, "/operator", "a", "1");
  if (cfg.coefficient_src != "1")
    cfg.op_spec.coefficient =
        detail::parse_expr_checked(cfg.coefficient_src, "/operator/a");

  const nlohmann::json nl = j.value("nonlinearity", nlohmann::json::object());
  cfg.expr_src = get_checked<std::string>(nl, "/nonlinearity", "expr", "0");
  cfg.field.expr = detail::parse_expr_checked(cfg.expr_src,
                                              "/nonlinearity/expr");
  cfg.field.bound_m = get_checked<double>(nl, "/nonlinearity", "m", 1.0);
  cfg.field.lipschitz = get_checked<double>(nl, "/nonlinearity", "L", 1.0);
  const nlohmann::json* fp = detail::find(nl, "f_plus");
  const nlohmann::json* fm = detail::find(nl, "f_minus");
  if (fp && !fp->is_null()) {
    cfg.f_plus_src = fp->get<std::string>();
    cfg.field.f_plus =
        detail::parse_expr_checked(*cfg.f_plus_src, "/nonlinearity/f_plus");
  }
  if (fm && !fm->is_null()) {
    cfg.f_minus_src = fm->get<std::string>();
    cfg.field.f_minus =
        detail::parse_expr_checked(*cfg.f_minus_src, "/nonlinearity/f_minus");
  }

  const nlohmann::json rs = j.value("resonance", nlohmann::json::object());
  cfg.k = get_checked<int>(rs, "/resonance", "k", 1);
  if (const nlohmann::json* lam = detail::find(rs, "lambda"))
    cfg.lambda = lam->get<double>();
  cfg.period = get_checked<double>(rs, "/resonance", "T", 1.0);
  if (!(cfg.period > 0.0))
    throw ConfigError("config error at /resonance/T: period must be positive");
  if (cfg.k < 1)
    throw ConfigError("config error at /resonance/k: index must be >= 1");
  cfg.field.period = cfg.period;
  cfg.rank_tol = get_checked<double>(rs, "/resonance", "rank_tol", -1.0);

  const nlohmann::json sv = j.value("solver", nlohmann::json::object());
  cfg.solver.newton_tol = get_checked<double>(sv, "/solver", "newton_tol", 1e-8);
  cfg.solver.eps_start = get_checked<double>(sv, "/solver", "eps_start",
                                             1.0 / 16.0);
  cfg.solver.escape_radius =
      get_checked<double>(sv, "/solver", "escape_radius", 1e3);
  cfg.solver.integrator.n_steps =
      get_checked<int>(sv, "/solver", "n_steps", 256);
  const std::string scheme = get_checked<std::string>(
      sv, "/solver", "scheme", "exponential-midpoint");
  if (scheme == "exponential-euler")
    cfg.solver.integrator.scheme = Scheme::ExponentialEuler;
  else if (scheme == "exponential-midpoint")
    cfg.solver.integrator.scheme = Scheme::ExponentialMidpoint;
  else
    throw ConfigError(
        "config error at /solver/scheme: expected \"exponential-euler\" or "
        "\"exponential-midpoint\"");
  cfg.solver.integrator.picard_iterations =
      get_checked<int>(sv, "/solver", "picard_iterations", 2);
  cfg.solver.n_t = get_checked<int>(sv, "/solver", "n_t", 64);
  cfg.solver.n_sphere = get_checked<int>(sv, "/solver", "n_sphere", 64);
  cfg.galerkin_dim = get_checked<int>(sv, "/solver", "galerkin_dim", 2);
  cfg.radius = get_checked<double>(sv, "/solver", "radius", -1.0);

  const nlohmann::json out = j.value("output", nlohmann::json::object());
  cfg.out_dir = get_checked<std::string>(out, "/output", "dir", "out");
  return cfg;
}

inline ScenarioConfig load_scenario(const std::optional<std::string>& preset,
                                    const std::optional<std::string>& path) {
  nlohmann::json merged = nlohmann::json::object();
  if (preset) merged = preset_config(*preset);
  if (path) {
    std::ifstream in(*path);
    if (!in)
      throw ConfigError("cannot open config file '" + *path + "'");
    nlohmann::json user;
    try {
      user = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError("config error in " + *path + ": " + e.what());
    }
    detail::merge_patch(merged, user);
  }
  if (merged.empty())
    throw ConfigError("no configuration given: pass --preset and/or --config");
  return scenario_from_json(merged);
}

}  // namespace parares

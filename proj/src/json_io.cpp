#include "gscs/json_io.hpp"

#include <algorithm>
#include <cstdio>

#include "gscs/errors.hpp"
#include "gscs/model.hpp"
#include "gscs/schemes.hpp"

namespace gscs {

namespace {

void require_object(const json& j, const char* what) {
  if (!j.is_object())
    throw ConfigError(std::string(what) + " must be a JSON object");
}

const json& member(const json& j, const char* key, const char* what) {
  const auto it = j.find(key);
  if (it == j.end())
    throw ConfigError(std::string(what) + " is missing key \"" + key + "\"");
  return *it;
}

Scalar get_number(const json& j, const char* key, const char* what) {
  const json& v = member(j, key, what);
  if (!v.is_number())
    throw ConfigError(std::string(what) + " key \"" + key +
                      "\" must be a number");
  return v.get<Scalar>();
}

int get_int(const json& j, const char* key, const char* what) {
  const json& v = member(j, key, what);
  if (!v.is_number_integer())
    throw ConfigError(std::string(what) + " key \"" + key +
                      "\" must be an integer");
  return v.get<int>();
}

std::string get_string(const json& j, const char* key, const char* what) {
  const json& v = member(j, key, what);
  if (!v.is_string())
    throw ConfigError(std::string(what) + " key \"" + key +
                      "\" must be a string");
  return v.get<std::string>();
}

Vector number_array(const json& j, const char* what) {
  if (!j.is_array())
    throw ConfigError(std::string(what) + " must be an array of numbers");
  Vector out(j.size());
  for (size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number())
      throw ConfigError(std::string(what) + " must be an array of numbers");
    out[static_cast<int>(k)] = j[k].get<Scalar>();
  }
  return out;
}

// Scheme vectors accept either an explicit array or {"kind", "budget"}.
Vector scheme_or_vector(const json& j, const Graph& g, const char* what) {
  if (j.is_array()) return number_array(j, what);
  if (j.is_object()) {
    SchemeSpec spec;
    spec.kind = scheme_from_string(get_string(j, "kind", what));
    spec.budget = get_number(j, "budget", what);
    return realize(spec, g);
  }
  throw ConfigError(std::string(what) +
                    " must be an array or a scheme object {kind, budget}");
}

} // namespace

Graph graph_from_json(const json& j) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    const auto& names = catalog_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw ConfigError("unknown catalog graph '" + name +
                        "' (expected G1..G6)");
    return catalog_graph(name);
  }
  require_object(j, "graph");
  const int n = get_int(j, "n", "graph");
  bool undirected = false;
  if (j.contains("undirected")) {
    if (!j["undirected"].is_boolean())
      throw ConfigError("graph key \"undirected\" must be a boolean");
    undirected = j["undirected"].get<bool>();
  }
  const json& edges = member(j, "edges", "graph");
  if (!edges.is_array())
    throw ConfigError("graph key \"edges\" must be an array of [i, j] pairs");
  std::vector<std::pair<int, int>> zero_based;
  for (const json& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw ConfigError("graph edges must be [i, j] integer pairs");
    zero_based.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1);
  }
  return Graph(n, zero_based, undirected);
}

InfectionFunction infection_from_json(const json& j) {
  require_object(j, "f");
  const std::string kind = get_string(j, "kind", "f");
  if (kind == "rational") return rational_infection();
  if (kind == "identity") return identity_infection();
  if (kind == "saturating")
    return saturating_infection(get_number(j, "a", "f"));
  throw ConfigError("unknown infection kind '" + kind +
                    "' (expected rational|identity|saturating)");
}

GscsParams params_from_json(const json& j) {
  require_object(j, "params");
  Graph g = graph_from_json(member(j, "graph", "params"));
  const Scalar alpha = get_number(j, "alpha", "params");
  const Scalar beta = get_number(j, "beta", "params");
  const Scalar gamma = get_number(j, "gamma", "params");
  const Scalar delta = get_number(j, "delta", "params");
  Vector x = scheme_or_vector(member(j, "x", "params"), g, "x");
  Vector y = scheme_or_vector(member(j, "y", "params"), g, "y");
  Vector z = scheme_or_vector(member(j, "z", "params"), g, "z");
  InfectionFunction f = j.contains("f") ? infection_from_json(j["f"])
                                        : rational_infection();
  return GscsParams(alpha, beta, gamma, delta, std::move(x), std::move(y),
                    std::move(z), std::move(g), std::move(f));
}

SweepConfig sweep_config_from_json(const json& j) {
  require_object(j, "sweep config");
  const std::string exp = get_string(j, "experiment", "sweep config");
  SweepConfig cfg;
  if (exp == "rpr_sweep") cfg = default_rpr_config();
  else if (exp == "scale_sweep") cfg = default_scale_config();
  else if (exp == "edge_addition") cfg = default_edge_addition_config();
  else
    throw ConfigError("unknown experiment '" + exp +
                      "' (expected rpr_sweep|scale_sweep|edge_addition)");

  if (j.contains("levels")) {
    const json& lv = j["levels"];
    require_object(lv, "levels");
    if (lv.contains("alpha")) cfg.levels.alpha = get_number(lv, "alpha", "levels");
    if (lv.contains("beta")) cfg.levels.beta = get_number(lv, "beta", "levels");
    if (lv.contains("gamma")) cfg.levels.gamma = get_number(lv, "gamma", "levels");
    if (lv.contains("delta")) cfg.levels.delta = get_number(lv, "delta", "levels");
  }
  if (j.contains("graphs")) {
    const json& gs = j["graphs"];
    if (!gs.is_array() || gs.empty())
      throw ConfigError("graphs must be a nonempty array");
    cfg.graphs.clear();
    int inline_count = 0;
    for (const json& entry : gs) {
      if (entry.is_string()) {
        cfg.graphs.emplace_back(entry.get<std::string>(),
                                graph_from_json(entry));
      } else {
        std::string label = entry.is_object() && entry.contains("label")
                                ? get_string(entry, "label", "graph")
                                : "inline" + std::to_string(++inline_count);
        cfg.graphs.emplace_back(std::move(label), graph_from_json(entry));
      }
    }
  }
  if (j.contains("combos")) {
    const json& cs = j["combos"];
    if (!cs.is_array() || cs.empty())
      throw ConfigError("combos must be a nonempty array");
    cfg.combos.clear();
    for (size_t k = 0; k < cs.size(); ++k) {
      require_object(cs[k], "combo");
      SchemeCombo combo;
      combo.label = cs[k].contains("label")
                        ? get_string(cs[k], "label", "combo")
                        : std::string(1, static_cast<char>('a' + k % 26));
      combo.x = scheme_from_string(get_string(cs[k], "x", "combo"));
      combo.y = scheme_from_string(get_string(cs[k], "y", "combo"));
      combo.z = scheme_from_string(get_string(cs[k], "z", "combo"));
      cfg.combos.push_back(std::move(combo));
    }
  }
  if (j.contains("r_grid")) {
    const Vector v = number_array(j["r_grid"], "r_grid");
    cfg.r_grid.assign(v.data(), v.data() + v.size());
  }
  if (j.contains("r_ad_grid")) {
    const Vector v = number_array(j["r_ad_grid"], "r_ad_grid");
    cfg.r_ad_grid.assign(v.data(), v.data() + v.size());
  }
  if (j.contains("s_grid")) {
    const json& sg = j["s_grid"];
    if (!sg.is_array())
      throw ConfigError("s_grid must be an array of integers");
    cfg.s_grid.clear();
    for (const json& e : sg) {
      if (!e.is_number_integer())
        throw ConfigError("s_grid must be an array of integers");
      cfg.s_grid.push_back(e.get<int>());
    }
  }
  if (j.contains("x_budget")) cfg.x_budget = get_number(j, "x_budget", "sweep config");
  if (j.contains("y_budget")) cfg.y_budget = get_number(j, "y_budget", "sweep config");
  if (j.contains("z_budget")) cfg.z_budget = get_number(j, "z_budget", "sweep config");
  if (j.contains("f")) cfg.f = infection_from_json(j["f"]);
  if (j.contains("solver")) {
    const json& sv = j["solver"];
    require_object(sv, "solver");
    if (sv.contains("tol")) cfg.solver.tol = get_number(sv, "tol", "solver");
    if (sv.contains("max_iter"))
      cfg.solver.max_iter = get_int(sv, "max_iter", "solver");
    if (sv.contains("damping"))
      cfg.solver.damping = get_number(sv, "damping", "solver");
  }
  return cfg;
}

json graph_to_json(const Graph& g) {
  const Matrix& adj = g.adjacency();
  const bool symmetric = adj == adj.transpose();
  json edges = json::array();
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) {
      if (adj(i, j) == 0) continue;
      if (symmetric && j < i) continue;
      edges.push_back(json::array({i + 1, j + 1}));
    }
  return {{"n", g.size()}, {"undirected", symmetric}, {"edges", edges}};
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json equilibrium_to_json(const EquilibriumResult& r) {
  return {{"c_star", vector_to_json(r.c_star)},
          {"residual", r.residual},
          {"rhs_residual", r.rhs_residual},
          {"iterations", r.iterations},
          {"within_bounds", r.within_bounds},
          {"C_mean", mean_compromise(r.c_star)},
          {"S_L", r.limit_security}};
}

json sensitivity_to_json(const SensitivityReport& r) {
  json out = {{"parameter", r.parameter.name()},
              {"dC_star", vector_to_json(r.d_c_star)},
              {"dS_L", r.d_limit_security}};
  if (r.fd_rel_err) out["fd_rel_err"] = *r.fd_rel_err;
  if (r.sign_ok) out["sign_ok"] = *r.sign_ok;
  return out;
}

json validation_to_json(const ValidationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(
        {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"all_passed", r.all_passed()}, {"checks", checks}};
}

std::string format_double(Scalar v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

} // namespace gscs

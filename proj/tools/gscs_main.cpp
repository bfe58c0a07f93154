#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gscs/dynamics.hpp"
#include "gscs/equilibrium.hpp"
#include "gscs/errors.hpp"
#include "gscs/experiments.hpp"
#include "gscs/format.hpp"
#include "gscs/json_io.hpp"
#include "gscs/model.hpp"
#include "gscs/sensitivity.hpp"

namespace {

using namespace gscs;

json read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config is not valid JSON: " + std::string(e.what()));
  }
}

// Output sink: --out path, or stdout when empty.
class Sink {
public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw ConfigError("cannot open output file '" + path + "'");
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

std::string pick_format(const std::string& requested, const char* fallback) {
  return requested.empty() ? fallback : requested;
}

// [0,1) with 53 random bits; keeps restart draws identical across platforms.
double unit_double(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

struct SolverFlags {
  double tol = 1e-12;
  int max_iter = 100000;
};

void add_solver_flags(CLI::App* sub, SolverFlags& flags) {
  sub->add_option("--tol", flags.tol, "fixed-point stopping tolerance");
  sub->add_option("--max-iter", flags.max_iter, "iteration cap for the solver");
}

void cmd_equilibrium(const json& cfg, const SolverFlags& sf, int probe,
                     std::uint64_t seed, const std::string& format,
                     std::ostream& os) {
  const GscsParams p = params_from_json(cfg);
  const EquilibriumResult res = solve(p, sf.tol, sf.max_iter);
  if (format == "csv") {
    os << "S_L,C_mean,iterations,residual";
    for (int i = 0; i < p.size(); ++i) os << ",c_" << (i + 1);
    os << "\n"
       << format_double(res.limit_security) << ','
       << format_double(mean_compromise(res.c_star)) << ',' << res.iterations
       << ',' << format_double(res.residual);
    for (int i = 0; i < p.size(); ++i)
      os << ',' << format_double(res.c_star[i]);
    os << "\n";
    return;
  }
  json out = equilibrium_to_json(res);
  if (probe > 0) {
    const auto [lower, upper] = equilibrium_bounds(p);
    std::mt19937_64 eng(seed);
    Scalar disagreement = 0;
    for (int k = 0; k < probe; ++k) {
      Vector w0(p.size());
      for (int i = 0; i < p.size(); ++i)
        w0[i] = lower[i] + unit_double(eng) * (upper[i] - lower[i]);
      const EquilibriumResult probe_res = solve_from(p, w0, sf.tol, sf.max_iter);
      disagreement = std::max(
          disagreement,
          (probe_res.c_star - res.c_star).lpNorm<Eigen::Infinity>());
    }
    out["probe_restarts"] = probe;
    out["probe_max_disagreement"] = disagreement;
  }
  os << out.dump(2) << "\n";
}

void cmd_simulate(const json& cfg, const SolverFlags& sf, double dt,
                  double t_end, bool dt_given, bool t_end_given,
                  const std::string& format, std::ostream& os) {
  const GscsParams p = params_from_json(cfg);
  if (!dt_given && cfg.contains("dt")) dt = cfg["dt"].get<double>();
  if (!t_end_given && cfg.contains("t_end")) t_end = cfg["t_end"].get<double>();
  Vector c0 = Vector::Zero(p.size());
  if (cfg.contains("c0")) {
    if (!cfg["c0"].is_array())
      throw ConfigError("c0 must be an array of numbers");
    c0.resize(cfg["c0"].size());
    for (size_t k = 0; k < cfg["c0"].size(); ++k) {
      if (!cfg["c0"][k].is_number())
        throw ConfigError("c0 must be an array of numbers");
      c0[static_cast<int>(k)] = cfg["c0"][k].get<double>();
    }
  }
  int thin = 1;
  if (cfg.contains("thin")) thin = cfg["thin"].get<int>();

  const Trajectory traj = integrate(p, c0, t_end, dt);
  if (format == "json") {
    json states = json::array();
    for (const Vector& s : traj.states) states.push_back(vector_to_json(s));
    os << json{{"times", traj.times},
               {"states", states},
               {"params_digest", traj.params_digest}}
              .dump()
       << "\n";
    return;
  }
  // The V column needs the equilibrium; leave it out if the solve fails.
  try {
    const Vector c_star = solve(p, sf.tol, sf.max_iter).c_star;
    write_trajectory_csv(os, traj, &c_star, thin);
  } catch (const Error&) {
    write_trajectory_csv(os, traj, nullptr, thin);
  }
}

void cmd_sensitivity(const json& cfg, const SolverFlags& sf,
                     const std::string& format, std::ostream& os) {
  const GscsParams p = params_from_json(cfg);
  std::vector<Parameter> thetas;
  if (cfg.contains("parameters")) {
    if (!cfg["parameters"].is_array())
      throw ConfigError("parameters must be an array of names");
    for (const json& t : cfg["parameters"]) {
      if (!t.is_string())
        throw ConfigError("parameters must be an array of names");
      thetas.push_back(Parameter::parse(t.get<std::string>()));
    }
  } else {
    for (auto k : {Parameter::Kind::alpha, Parameter::Kind::beta,
                   Parameter::Kind::gamma, Parameter::Kind::delta})
      thetas.push_back(Parameter::global(k));
  }
  bool fd_check = true;
  if (cfg.contains("fd_check")) fd_check = cfg["fd_check"].get<bool>();

  const Vector c_star = solve(p, sf.tol, sf.max_iter).c_star;
  std::vector<SensitivityReport> reports;
  for (const Parameter& theta : thetas)
    reports.push_back(fd_check ? sensitivity_with_fd_check(p, c_star, theta)
                               : sensitivity_wrt(p, c_star, theta));

  if (format == "json") {
    json arr = json::array();
    for (const auto& rep : reports) arr.push_back(sensitivity_to_json(rep));
    os << arr.dump(2) << "\n";
    return;
  }
  os << "theta,node,dCstar,dSL,fd_rel_err,sign_ok\n";
  for (const auto& rep : reports)
    for (int i = 0; i < rep.d_c_star.size(); ++i) {
      os << rep.parameter.name() << ',' << (i + 1) << ','
         << format_double(rep.d_c_star[i]) << ','
         << format_double(rep.d_limit_security) << ',';
      if (rep.fd_rel_err) os << format_double(*rep.fd_rel_err);
      os << ',';
      if (rep.sign_ok) os << (*rep.sign_ok ? 1 : 0);
      os << "\n";
    }
}

json sweep_rows_to_json(const std::vector<SweepRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows)
    arr.push_back({{"experiment", r.experiment},
                   {"graph", r.graph},
                   {"x_scheme", r.x_scheme},
                   {"y_scheme", r.y_scheme},
                   {"z_scheme", r.z_scheme},
                   {"r", r.r},
                   {"s", r.s},
                   {"S_L", r.s_l},
                   {"C_mean", r.c_mean},
                   {"iters", r.iterations},
                   {"residual", r.residual},
                   {"error", r.error}});
  return arr;
}

json edge_rows_to_json(const std::vector<EdgeAdditionRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows)
    arr.push_back({{"experiment", "edge_addition"},
                   {"graph", r.graph},
                   {"edge_i", r.edge_i},
                   {"edge_j", r.edge_j},
                   {"S_L_before", r.s_l_before},
                   {"S_L_after", r.s_l_after},
                   {"delta", r.delta},
                   {"error", r.error}});
  return arr;
}

void cmd_sweep(const json& cfg, const std::string& format, std::ostream& os) {
  const SweepConfig sweep = sweep_config_from_json(cfg);
  if (sweep.kind == ExperimentKind::edge_addition) {
    const auto rows = run_edge_addition(sweep);
    if (format == "json") os << edge_rows_to_json(rows).dump(2) << "\n";
    else write_edge_addition_csv(os, rows);
    return;
  }
  const auto rows = sweep.kind == ExperimentKind::rpr_sweep
                        ? run_rpr_sweep(sweep)
                        : run_scale_sweep(sweep);
  if (format == "json") os << sweep_rows_to_json(rows).dump(2) << "\n";
  else write_sweep_csv(os, rows);
}

void cmd_catalog(const std::string& format, std::ostream& os) {
  if (format == "csv") {
    os << "graph,n,edge_i,edge_j\n";
    for (size_t k = 0; k < catalog_names().size(); ++k) {
      const Graph& g = tree_catalog()[k];
      for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j)
          if (g.has_edge(i, j))
            os << catalog_names()[k] << ',' << g.size() << ',' << (i + 1)
               << ',' << (j + 1) << "\n";
    }
    return;
  }
  json arr = json::array();
  for (size_t k = 0; k < catalog_names().size(); ++k) {
    const Graph& g = tree_catalog()[k];
    json entry = graph_to_json(g);
    entry["name"] = catalog_names()[k];
    entry["degree_multiset"] = g.degree_multiset();
    arr.push_back(std::move(entry));
  }
  os << arr.dump(2) << "\n";
}

void cmd_validate_f(const json& cfg, const std::string& format,
                    std::ostream& os) {
  const json& fj = cfg.contains("f") ? cfg["f"] : cfg;
  const InfectionFunction f = infection_from_json(fj);
  std::vector<Scalar> grid = default_validation_grid();
  if (cfg.contains("grid")) {
    if (!cfg["grid"].is_array())
      throw ConfigError("grid must be an array of numbers");
    grid.clear();
    for (const json& v : cfg["grid"]) {
      if (!v.is_number())
        throw ConfigError("grid must be an array of numbers");
      grid.push_back(v.get<Scalar>());
    }
  }
  const ValidationReport report = validate_infection_function(f, grid);
  if (format == "csv") {
    os << "check,passed,detail\n";
    for (const auto& c : report.checks)
      os << c.name << ',' << (c.passed ? 1 : 0) << ',' << c.detail << "\n";
    return;
  }
  os << validation_to_json(report).dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Attack-defense dynamics on networks: equilibria, stability, "
      "sensitivities, and resource-allocation sweeps"};
  app.require_subcommand(1);

  std::string config_path, out_path, format;
  SolverFlags solver;
  double dt = 0.01, t_end = 500.0;
  std::uint64_t seed = 0;
  int probe = 0;

  const auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* opt = sub->add_option("--config", config_path,
                                "JSON configuration file");
    if (needs_config) opt->required();
    sub->add_option("--out", out_path, "output file (default stdout)");
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  auto* simulate = app.add_subcommand(
      "simulate", "integrate the dynamics and export the trajectory");
  add_common(simulate, true);
  add_solver_flags(simulate, solver);
  auto* dt_opt = simulate->add_option("--dt", dt, "integration step");
  auto* t_end_opt = simulate->add_option("--t-end", t_end, "integration horizon");

  auto* equilibrium = app.add_subcommand(
      "equilibrium", "solve for the unique equilibrium and its certificates");
  add_common(equilibrium, true);
  add_solver_flags(equilibrium, solver);
  equilibrium->add_option(
      "--probe", probe,
      "random-restart count for the uniqueness probe (0 = off)");
  equilibrium->add_option("--seed", seed, "seed for the uniqueness probe");

  auto* sensitivity = app.add_subcommand(
      "sensitivity", "equilibrium derivatives for selected parameters");
  add_common(sensitivity, true);
  add_solver_flags(sensitivity, solver);

  auto* sweep = app.add_subcommand(
      "sweep", "run a configured experiment sweep and emit its table");
  add_common(sweep, true);

  auto* catalog = app.add_subcommand(
      "catalog", "list the built-in six-node tree networks");
  add_common(catalog, false);

  auto* validate_f = app.add_subcommand(
      "validate-f", "property-check an infection function definition");
  add_common(validate_f, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Sink sink(out_path);
    std::ostream& os = sink.os();
    if (simulate->parsed()) {
      cmd_simulate(read_config(config_path), solver, dt, t_end,
                   dt_opt->count() > 0, t_end_opt->count() > 0,
                   pick_format(format, "csv"), os);
    } else if (equilibrium->parsed()) {
      cmd_equilibrium(read_config(config_path), solver, probe, seed,
                      pick_format(format, "json"), os);
    } else if (sensitivity->parsed()) {
      cmd_sensitivity(read_config(config_path), solver,
                      pick_format(format, "csv"), os);
    } else if (sweep->parsed()) {
      cmd_sweep(read_config(config_path), pick_format(format, "csv"), os);
    } else if (catalog->parsed()) {
      cmd_catalog(pick_format(format, "json"), os);
    } else if (validate_f->parsed()) {
      cmd_validate_f(read_config(config_path), pick_format(format, "json"), os);
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << json{{"error", e.name()}, {"message", e.what()}}.dump()
              << std::endl;
    return 2;
  } catch (const Error& e) {
    std::cerr << json{{"error", e.name()}, {"message", e.what()}}.dump()
              << std::endl;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "InternalError"}, {"message", e.what()}}.dump()
              << std::endl;
    return 2;
  }
}

#include "gscs/experiments.hpp"

#include <atomic>
#include <cstdlib>
#include <ostream>
#include <thread>

#include "gscs/equilibrium.hpp"
#include "gscs/errors.hpp"
#include "gscs/format.hpp"
#include "gscs/model.hpp"
#include "gscs/params.hpp"

namespace gscs {

namespace {

int thread_cap() {
  const char* env = std::getenv("GSCS_THREADS");
  const int autodetect =
      std::max(1u, std::thread::hardware_concurrency());
  if (!env || !*env) return autodetect;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end || v < 0) return 1;
  return v == 0 ? autodetect : static_cast<int>(v);
}

// Runs fn(0..count-1) on up to GSCS_THREADS workers. Each index writes only
// its own output slot, so the emitted order never depends on the schedule.
template <class Fn>
void parallel_for(size_t count, Fn&& fn) {
  const size_t workers =
      std::min<size_t>(static_cast<size_t>(thread_cap()), count);
  if (workers <= 1) {
    for (size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (size_t k = next.fetch_add(1); k < count; k = next.fetch_add(1))
        fn(k);
    });
  for (auto& t : pool) t.join();
}

template <class Fill>
void guarded(std::string& error_slot, Fill&& fill) {
  try {
    fill();
  } catch (const Error& e) {
    error_slot = e.name();
  } catch (const std::exception&) {
    error_slot = "InternalError";
  }
}

void fill_row(SweepRow& row, const Levels& lv, const Graph& g,
              const SchemeCombo& combo, Scalar xb, Scalar yb, Scalar zb,
              const InfectionFunction& f, const SolverSettings& sv) {
  guarded(row.error, [&] {
    GscsParams p(lv.alpha, lv.beta, lv.gamma, lv.delta,
                 realize({combo.x, xb}, g), realize({combo.y, yb}, g),
                 realize({combo.z, zb}, g), g, f);
    const EquilibriumResult res = solve(p, sv.tol, sv.max_iter, sv.damping);
    row.s_l = res.limit_security;
    row.c_mean = mean_compromise(res.c_star);
    row.iterations = res.iterations;
    row.residual = res.residual;
  });
}

void check_sweep_inputs(const SweepConfig& cfg, bool need_r, bool need_s) {
  if (cfg.graphs.empty()) throw InvalidParams("sweep needs at least one graph");
  if (cfg.combos.empty()) throw InvalidParams("sweep needs at least one scheme combo");
  if (need_r && cfg.r_grid.empty()) throw InvalidParams("sweep needs an r grid");
  if (need_s && (cfg.s_grid.empty() || cfg.r_ad_grid.empty()))
    throw InvalidParams("sweep needs s and r_AD grids");
}

} // namespace

std::vector<SweepRow> run_rpr_sweep(const SweepConfig& cfg) {
  check_sweep_inputs(cfg, true, false);
  std::vector<SweepRow> rows;
  std::vector<std::tuple<const Graph*, const SchemeCombo*, Scalar>> jobs;
  for (const auto& [label, g] : cfg.graphs)
    for (const auto& combo : cfg.combos)
      for (const Scalar r : cfg.r_grid) {
        SweepRow row;
        row.experiment = "rpr_sweep";
        row.graph = label;
        row.x_scheme = to_string(combo.x);
        row.y_scheme = to_string(combo.y);
        row.z_scheme = to_string(combo.z);
        row.r = r;
        rows.push_back(std::move(row));
        jobs.emplace_back(&g, &combo, r);
      }
  parallel_for(jobs.size(), [&](size_t idx) {
    const auto& [g, combo, r] = jobs[idx];
    fill_row(rows[idx], cfg.levels, *g, *combo, 1.0, r / (1 + r), 1 / (1 + r),
             cfg.f, cfg.solver);
  });
  return rows;
}

std::vector<SweepRow> run_scale_sweep(const SweepConfig& cfg) {
  check_sweep_inputs(cfg, false, true);
  std::vector<SweepRow> rows;
  std::vector<std::tuple<const Graph*, const SchemeCombo*, Scalar, int>> jobs;
  for (const auto& [label, g] : cfg.graphs)
    for (const auto& combo : cfg.combos)
      for (const Scalar r_ad : cfg.r_ad_grid)
        for (const int s : cfg.s_grid) {
          SweepRow row;
          row.experiment = "scale_sweep";
          row.graph = label;
          row.x_scheme = to_string(combo.x);
          row.y_scheme = to_string(combo.y);
          row.z_scheme = to_string(combo.z);
          row.r = r_ad;
          row.s = s;
          rows.push_back(std::move(row));
          jobs.emplace_back(&g, &combo, r_ad, s);
        }
  parallel_for(jobs.size(), [&](size_t idx) {
    const auto& [g, combo, r_ad, s] = jobs[idx];
    fill_row(rows[idx], cfg.levels, *g, *combo, 2 * r_ad * s, Scalar(s),
             Scalar(s), cfg.f, cfg.solver);
  });
  return rows;
}

std::vector<EdgeAdditionRow> run_edge_addition(const SweepConfig& cfg) {
  if (cfg.graphs.empty()) throw InvalidParams("sweep needs at least one graph");
  const SchemeCombo combo = cfg.combos.empty()
                                ? SchemeCombo{"a", SchemeKind::uniform,
                                              SchemeKind::uniform,
                                              SchemeKind::uniform}
                                : cfg.combos.front();

  struct Job {
    const std::string* label;
    const Graph* g;
    int i, j;
    Scalar before = 0;
    std::string before_error;
    Vector x, y, z; // allocations fixed on the original graph
  };
  std::vector<Job> jobs;
  for (const auto& entry : cfg.graphs) {
    const Graph& g = entry.second;
    Scalar before = 0;
    std::string before_error;
    Vector x, y, z;
    guarded(before_error, [&] {
      x = realize({combo.x, cfg.x_budget}, g);
      y = realize({combo.y, cfg.y_budget}, g);
      z = realize({combo.z, cfg.z_budget}, g);
      GscsParams p(cfg.levels.alpha, cfg.levels.beta, cfg.levels.gamma,
                   cfg.levels.delta, x, y, z, g, cfg.f);
      before = solve(p, cfg.solver.tol, cfg.solver.max_iter,
                     cfg.solver.damping)
                   .limit_security;
    });
    for (int i = 0; i < g.size(); ++i)
      for (int j = i + 1; j < g.size(); ++j) {
        if (g.has_edge(i, j) || g.has_edge(j, i)) continue;
        jobs.push_back({&entry.first, &g, i, j, before, before_error, x, y, z});
      }
  }

  std::vector<EdgeAdditionRow> rows(jobs.size());
  parallel_for(jobs.size(), [&](size_t idx) {
    const Job& job = jobs[idx];
    EdgeAdditionRow& row = rows[idx];
    row.graph = *job.label;
    row.edge_i = job.i + 1;
    row.edge_j = job.j + 1;
    if (!job.before_error.empty()) {
      row.error = job.before_error;
      return;
    }
    row.s_l_before = job.before;
    guarded(row.error, [&] {
      const Graph augmented = add_edge(*job.g, job.i, job.j, true);
      GscsParams p(cfg.levels.alpha, cfg.levels.beta, cfg.levels.gamma,
                   cfg.levels.delta, job.x, job.y, job.z, augmented, cfg.f);
      row.s_l_after = solve(p, cfg.solver.tol, cfg.solver.max_iter,
                            cfg.solver.damping)
                          .limit_security;
      row.delta = row.s_l_after - row.s_l_before;
    });
  });
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "experiment,graph,x_scheme,y_scheme,z_scheme,r,s,S_L,C_mean,iters,"
        "residual,error\n";
  for (const auto& row : rows) {
    os << row.experiment << ',' << row.graph << ',' << row.x_scheme << ','
       << row.y_scheme << ',' << row.z_scheme << ',' << format_double(row.r)
       << ',' << row.s << ',' << format_double(row.s_l) << ','
       << format_double(row.c_mean) << ',' << row.iterations << ','
       << format_double(row.residual) << ',' << row.error << '\n';
  }
}

void write_edge_addition_csv(std::ostream& os,
                             const std::vector<EdgeAdditionRow>& rows) {
  os << "experiment,graph,edge_i,edge_j,S_L_before,S_L_after,delta,error\n";
  for (const auto& row : rows) {
    os << "edge_addition," << row.graph << ',' << row.edge_i << ','
       << row.edge_j << ',' << format_double(row.s_l_before) << ','
       << format_double(row.s_l_after) << ',' << format_double(row.delta)
       << ',' << row.error << '\n';
  }
}

namespace {

std::vector<std::pair<std::string, Graph>> catalog_with_labels() {
  std::vector<std::pair<std::string, Graph>> out;
  for (size_t k = 0; k < catalog_names().size(); ++k)
    out.emplace_back(catalog_names()[k], tree_catalog()[k]);
  return out;
}

} // namespace

SweepConfig default_rpr_config() {
  SweepConfig cfg;
  cfg.kind = ExperimentKind::rpr_sweep;
  cfg.levels = {0.05, 0.01, 1.0, 1.0};
  cfg.graphs = catalog_with_labels();
  const auto u = SchemeKind::uniform;
  const auto df = SchemeKind::degree_first;
  const auto dl = SchemeKind::degree_last;
  cfg.combos = {{"a", u, u, u},   {"b", u, u, df},  {"c", u, df, u},
                {"d", u, df, df}, {"e", df, u, u},  {"f", df, u, df},
                {"g", df, df, u}, {"h", df, df, df}, {"i", dl, u, u},
                {"j", dl, u, df}, {"k", dl, df, u}, {"l", dl, df, df}};
  cfg.r_grid = {0.25, 1.0 / 3, 0.5, 1, 2, 3, 4};
  return cfg;
}

SweepConfig default_scale_config() {
  SweepConfig cfg;
  cfg.kind = ExperimentKind::scale_sweep;
  cfg.levels = {0.1, 0.05, 0.5, 1.0};
  cfg.graphs = catalog_with_labels();
  const auto u = SchemeKind::uniform;
  const auto df = SchemeKind::degree_first;
  cfg.combos = {
      {"a", u, u, u}, {"d", u, df, df}, {"g", df, u, u}, {"j", df, df, df}};
  cfg.r_ad_grid = {0.5, 1, 2};
  cfg.s_grid = {2, 3, 4, 5, 6, 7, 8, 9, 10};
  return cfg;
}

SweepConfig default_edge_addition_config() {
  SweepConfig cfg;
  cfg.kind = ExperimentKind::edge_addition;
  cfg.levels = {0.05, 0.01, 1.0, 1.0};
  cfg.graphs = catalog_with_labels();
  cfg.combos = {{"a", SchemeKind::uniform, SchemeKind::uniform,
                 SchemeKind::uniform}};
  cfg.x_budget = 1.0;
  cfg.y_budget = 0.5;
  cfg.z_budget = 0.5;
  return cfg;
}

} // namespace gscs

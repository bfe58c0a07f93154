#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gscs/graph.hpp"
#include "gscs/infection.hpp"
#include "gscs/schemes.hpp"
#include "gscs/types.hpp"

namespace gscs {

/// Technical levels shared by every run of a sweep.
struct Levels {
  Scalar alpha, beta, gamma, delta;
};

struct SolverSettings {
  Scalar tol = 1e-12;
  int max_iter = 100000;
  Scalar damping = 1.0;
};

/// One (x scheme, y scheme, z scheme) assignment; label is the panel tag in
/// the output ("a", "b", ...).
struct SchemeCombo {
  std::string label;
  SchemeKind x, y, z;
};

enum class ExperimentKind { rpr_sweep, scale_sweep, edge_addition };

struct SweepConfig {
  ExperimentKind kind = ExperimentKind::rpr_sweep;
  Levels levels{};
  std::vector<std::pair<std::string, Graph>> graphs; // label, graph
  std::vector<SchemeCombo> combos;
  std::vector<Scalar> r_grid;      // rpr_sweep: recovery-prevention ratios
  std::vector<int> s_grid;         // scale_sweep: resource scales
  std::vector<Scalar> r_ad_grid;   // scale_sweep: attack-defense ratios
  Scalar x_budget = 1.0;           // edge_addition budgets
  Scalar y_budget = 0.5;
  Scalar z_budget = 0.5;
  InfectionFunction f = rational_infection();
  SolverSettings solver{};
};

struct SweepRow {
  std::string experiment;
  std::string graph;
  std::string x_scheme, y_scheme, z_scheme;
  Scalar r = 0;        // rpr_sweep: r; scale_sweep: r_AD
  int s = 0;           // scale_sweep only, 0 otherwise
  Scalar s_l = 0;
  Scalar c_mean = 0;
  int iterations = 0;
  Scalar residual = 0;
  std::string error;   // empty on success, error name otherwise
};

struct EdgeAdditionRow {
  std::string graph;
  int edge_i = 0, edge_j = 0; // added undirected edge, 1-based
  Scalar s_l_before = 0, s_l_after = 0, delta = 0;
  std::string error;
};

/// For each (graph, combo, r): x/y/z budgets 1, r/(1+r), 1/(1+r).
std::vector<SweepRow> run_rpr_sweep(const SweepConfig& cfg);

/// For each (graph, combo, r_AD, s): x budget 2 r_AD s, y and z budgets s.
std::vector<SweepRow> run_scale_sweep(const SweepConfig& cfg);

/// For each graph and each absent undirected pair, S_L before and after the
/// addition under uniform schemes with the configured budgets.
std::vector<EdgeAdditionRow> run_edge_addition(const SweepConfig& cfg);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_edge_addition_csv(std::ostream& os,
                             const std::vector<EdgeAdditionRow>& rows);

/// The three stock configurations: the r sweep over the tree catalog with
/// twelve scheme combinations, the scale sweep with four, and the
/// edge-addition study at r = 1.
SweepConfig default_rpr_config();
SweepConfig default_scale_config();
SweepConfig default_edge_addition_config();

} // namespace gscs

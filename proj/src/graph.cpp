#include "gscs/graph.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "gscs/errors.hpp"

namespace gscs {

namespace {

void check_endpoint(int n, int v) {
  if (v < 0 || v >= n)
    throw InvalidEdge("node index " + std::to_string(v + 1) +
                      " out of range 1.." + std::to_string(n));
}

// forward = true: nodes reachable from start; false: nodes that reach start.
std::vector<char> reachable(const Matrix& adj, int start, bool forward) {
  const int n = static_cast<int>(adj.rows());
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v) {
      Scalar a = forward ? adj(u, v) : adj(v, u);
      if (a != 0 && !seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

} // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges, bool undirected)
    : n_(n) {
  if (n < 2)
    throw InvalidParams("graph needs at least 2 nodes, got " + std::to_string(n));
  adj_ = Matrix::Zero(n, n);
  for (const auto& [i, j] : edges) {
    check_endpoint(n, i);
    check_endpoint(n, j);
    if (i == j)
      throw InvalidEdge("self-loop at node " + std::to_string(i + 1));
    adj_(i, j) = 1; // duplicates collapse silently: set semantics
    if (undirected) adj_(j, i) = 1;
  }
  if (auto bad = find_unreachable_pair(adj_))
    throw NotStronglyConnected(bad->first, bad->second,
                               "no directed path from node " +
                                   std::to_string(bad->first + 1) + " to node " +
                                   std::to_string(bad->second + 1));
}

bool Graph::has_edge(int i, int j) const {
  check_endpoint(n_, i);
  check_endpoint(n_, j);
  return adj_(i, j) != 0;
}

int Graph::arc_count() const { return static_cast<int>(adj_.sum()); }

std::vector<int> Graph::degree_multiset() const {
  std::vector<int> d(n_);
  for (int i = 0; i < n_; ++i) d[i] = out_degree(*this, i);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges, bool undirected) {
  return Graph(n, edges, undirected);
}

int out_degree(const Graph& g, int i) {
  check_endpoint(g.size(), i);
  return static_cast<int>(g.adjacency().row(i).sum());
}

int in_degree(const Graph& g, int i) {
  check_endpoint(g.size(), i);
  return static_cast<int>(g.adjacency().col(i).sum());
}

std::optional<std::pair<int, int>> find_unreachable_pair(const Matrix& adjacency) {
  const int n = static_cast<int>(adjacency.rows());
  auto fwd = reachable(adjacency, 0, true);
  for (int v = 0; v < n; ++v)
    if (!fwd[v]) return std::make_pair(0, v);
  auto bwd = reachable(adjacency, 0, false);
  for (int v = 0; v < n; ++v)
    if (!bwd[v]) return std::make_pair(v, 0);
  return std::nullopt;
}

bool is_strongly_connected(const Matrix& adjacency) {
  return !find_unreachable_pair(adjacency).has_value();
}

bool is_strongly_connected(const Graph& g) {
  return is_strongly_connected(g.adjacency());
}

Graph add_edge(const Graph& g, int i, int j, bool undirected) {
  check_endpoint(g.size(), i);
  check_endpoint(g.size(), j);
  if (i == j)
    throw InvalidEdge("self-loop at node " + std::to_string(i + 1));
  if (g.adjacency()(i, j) != 0 || (undirected && g.adjacency()(j, i) != 0))
    throw EdgeExists("edge " + std::to_string(i + 1) + " -> " +
                     std::to_string(j + 1) + " already present");
  Matrix adj = g.adjacency();
  adj(i, j) = 1;
  if (undirected) adj(j, i) = 1;
  return Graph(g.size(), std::move(adj));
}

namespace {

// 1-based edge lists for the six 6-node trees, ordered by descending maximum
// degree, then descending second-largest degree.
const std::vector<std::vector<std::pair<int, int>>>& tree_edge_lists() {
  static const std::vector<std::vector<std::pair<int, int>>> lists = {
      // G1 star: degrees {5,1,1,1,1,1}
      {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}},
      // G2: degrees {4,2,1,1,1,1}
      {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {5, 6}},
      // G3 double star: degrees {3,3,1,1,1,1}
      {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}},
      // G4 broom: degrees {3,2,2,1,1,1}, deg-3 node adjacent to two leaves
      {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}},
      // G5 spider: degrees {3,2,2,1,1,1}, deg-3 node adjacent to one leaf
      {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}},
      // G6 path: degrees {2,2,2,2,1,1}
      {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}},
  };
  return lists;
}

} // namespace

const std::vector<Graph>& tree_catalog() {
  static const std::vector<Graph> catalog = [] {
    std::vector<Graph> out;
    for (const auto& list : tree_edge_lists()) {
      std::vector<std::pair<int, int>> zero_based;
      for (auto [i, j] : list) zero_based.emplace_back(i - 1, j - 1);
      out.emplace_back(6, zero_based, true);
    }
    return out;
  }();
  return catalog;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"G1", "G2", "G3",
                                                 "G4", "G5", "G6"};
  return names;
}

const Graph& catalog_graph(const std::string& name) {
  const auto& names = catalog_names();
  for (size_t k = 0; k < names.size(); ++k)
    if (names[k] == name) return tree_catalog()[k];
  throw InvalidParams("unknown catalog graph '" + name + "' (expected G1..G6)");
}

} // namespace gscs

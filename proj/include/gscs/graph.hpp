#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gscs/types.hpp"

namespace gscs {

/// Directed interconnection network over N >= 2 nodes, stored as a dense 0/1
/// adjacency matrix (entry (i,j) = 1 iff there is an edge i -> j). Node
/// indices are 0-based in this API; all user-facing I/O is 1-based.
///
/// Invariants enforced at construction: no self-loops, entries in {0,1},
/// strongly connected. Immutable afterwards, safe to share across threads.
class Graph {
public:
  Graph(int n, const std::vector<std::pair<int, int>>& edges, bool undirected);

  int size() const { return n_; }
  const Matrix& adjacency() const { return adj_; }
  bool has_edge(int i, int j) const;
  /// Number of directed arcs (an undirected edge counts twice).
  int arc_count() const;
  /// Out-degrees sorted descending.
  std::vector<int> degree_multiset() const;

private:
  // Trusted path for add_edge: adjacency already validated.
  Graph(int n, Matrix adj) : n_(n), adj_(std::move(adj)) {}

  int n_;
  Matrix adj_;

  friend Graph add_edge(const Graph& g, int i, int j, bool undirected);
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges, bool undirected);

int out_degree(const Graph& g, int i);
int in_degree(const Graph& g, int i);

/// True iff every ordered pair (i,j) is connected by a directed path.
/// Forward and reverse reachability search from node 0.
bool is_strongly_connected(const Graph& g);
bool is_strongly_connected(const Matrix& adjacency);

/// First ordered pair (from,to) with no directed path, or nullopt.
std::optional<std::pair<int, int>> find_unreachable_pair(const Matrix& adjacency);

/// Value-semantics edge insertion: returns a new Graph, original unchanged.
Graph add_edge(const Graph& g, int i, int j, bool undirected);

/// The six non-isomorphic undirected trees on six vertices, as bidirectional
/// digraphs, ordered by descending maximum degree then descending
/// second-largest degree: star, {4,2,...}, double star, broom, spider, path.
const std::vector<Graph>& tree_catalog();
const std::vector<std::string>& catalog_names(); // "G1".."G6"
const Graph& catalog_graph(const std::string& name);

} // namespace gscs

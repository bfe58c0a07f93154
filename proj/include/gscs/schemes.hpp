#pragma once

#include <string>

#include "gscs/graph.hpp"
#include "gscs/types.hpp"

namespace gscs {

enum class SchemeKind { uniform, degree_first, degree_last };

std::string to_string(SchemeKind k);
SchemeKind scheme_from_string(const std::string& s);

/// A budget split across the nodes of a graph by out-degree:
///   uniform       budget / n everywhere
///   degree_first  proportional to d_i (throws ZeroDegree on an isolated node)
///   degree_last   proportional to 1 / d_i (ditto)
struct SchemeSpec {
  SchemeKind kind = SchemeKind::uniform;
  Scalar budget = 1.0;
};

/// The allocation vector; entries sum to the budget exactly up to roundoff.
Vector realize(const SchemeSpec& spec, const Graph& g);

} // namespace gscs

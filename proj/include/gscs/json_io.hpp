#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "gscs/equilibrium.hpp"
#include "gscs/experiments.hpp"
#include "gscs/format.hpp"
#include "gscs/graph.hpp"
#include "gscs/infection.hpp"
#include "gscs/params.hpp"
#include "gscs/sensitivity.hpp"
#include "gscs/types.hpp"

namespace gscs {

using json = nlohmann::json;

// Readers. Malformed structure (wrong type, missing key, unknown key where a
// fixed vocabulary applies) throws ConfigError; structurally valid content
// that violates model constraints surfaces the usual domain errors
// (InvalidParams, InvalidEdge, ...). Node indices are 1-based on the wire.

/// "G1".."G6", or {"n": ..., "undirected": ..., "edges": [[i, j], ...]};
/// "undirected" defaults to false.
Graph graph_from_json(const json& j);

/// {"kind": "rational" | "identity" | "saturating", "a": ...}.
InfectionFunction infection_from_json(const json& j);

/// {"alpha", "beta", "gamma", "delta", "x", "y", "z", "graph", "f"}; each of
/// x/y/z is either an explicit array or {"kind", "budget"} realized against
/// the graph; "f" is optional and defaults to rational.
GscsParams params_from_json(const json& j);

/// {"experiment": "rpr_sweep" | "scale_sweep" | "edge_addition", ...} with
/// every other key optional, overriding the matching default configuration.
SweepConfig sweep_config_from_json(const json& j);

// Writers.

json graph_to_json(const Graph& g);
json vector_to_json(const Vector& v);
json equilibrium_to_json(const EquilibriumResult& r);
json sensitivity_to_json(const SensitivityReport& r);
json validation_to_json(const ValidationReport& r);

} // namespace gscs

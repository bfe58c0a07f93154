#pragma once

#include <utility>

#include "gscs/params.hpp"
#include "gscs/types.hpp"

namespace gscs {

namespace detail {

// Cores over an explicit adjacency matrix so callers can evaluate the model
// on perturbed (real-valued) adjacency entries; the public wrappers below
// forward the graph's own matrix. adj(k, l) is the weight of arc k -> l, so
// the in-neighbor aggregate at node i is (adj^T c)_i.

Vector rhs(const GscsParams& p, const Matrix& adj, const Vector& c);
std::pair<Vector, Vector> equilibrium_bounds(const GscsParams& p,
                                             const Matrix& adj);
Vector h_map(const GscsParams& p, const Matrix& adj, const Vector& w);

} // namespace detail

/// Time derivative dc/dt of the compromise probabilities at state c.
Vector rhs(const GscsParams& p, const Vector& c);

/// Componentwise lower/upper equilibrium bounds (C_lower, C_upper); both lie
/// in (0, 1) and the box [C_lower, C_upper] traps every trajectory started
/// inside it.
std::pair<Vector, Vector> equilibrium_bounds(const GscsParams& p);

/// Monotone self-map of the bounds box whose fixed points are exactly the
/// equilibria of the dynamics.
Vector h_map(const GscsParams& p, const Vector& w);

/// Mean of c over the nodes.
Scalar mean_compromise(const Vector& c);

/// Network security level 1 - mean(c_star) for an equilibrium c_star.
Scalar limit_security(const Vector& c_star);

} // namespace gscs

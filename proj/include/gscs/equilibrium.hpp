#pragma once

#include <utility>

#include "gscs/params.hpp"
#include "gscs/types.hpp"

namespace gscs {

struct EquilibriumResult {
  Vector c_star;         // equilibrium compromise probabilities
  Scalar residual;       // ||H(c_star) - c_star||_inf, recomputed after exit
  Scalar rhs_residual;   // ||dc/dt at c_star||_inf
  int iterations;        // fixed-point iterations consumed
  bool within_bounds;    // c_star inside [C_lower, C_upper] (tol 1e-12)
  Scalar limit_security; // 1 - mean(c_star)
};

namespace detail {

EquilibriumResult solve(const GscsParams& p, const Matrix& adj, Scalar tol,
                        int max_iter, Scalar damping);

} // namespace detail

/// Damped fixed-point iteration on the monotone map H, started from the
/// midpoint of the equilibrium bounds box. Throws InvalidTolerance for a
/// non-finite or non-positive tol and NoConvergence (carrying the last
/// iterate) when max_iter is exhausted.
EquilibriumResult solve(const GscsParams& p, Scalar tol = 1e-12,
                        int max_iter = 100000, Scalar damping = 1.0);

/// Same iteration from a caller-chosen start, projected into the bounds box
/// before the first step.
EquilibriumResult solve_from(const GscsParams& p, const Vector& w0,
                             Scalar tol = 1e-12, int max_iter = 100000,
                             Scalar damping = 1.0);

/// (||H(c) - c||_inf, ||dc/dt||_inf) at an arbitrary state c.
std::pair<Scalar, Scalar> residual(const GscsParams& p, const Vector& c);

} // namespace gscs

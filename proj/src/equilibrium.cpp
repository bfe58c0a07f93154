#include "gscs/equilibrium.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gscs/errors.hpp"
#include "gscs/model.hpp"

namespace gscs {

namespace detail {

namespace {

EquilibriumResult iterate(const GscsParams& p, const Matrix& adj, Vector w,
                          Scalar tol, int max_iter, Scalar damping) {
  if (!std::isfinite(tol) || !(tol > 0))
    throw InvalidTolerance("tolerance must be a positive finite real");
  if (max_iter < 1) throw InvalidParams("max_iter must be >= 1");
  if (!std::isfinite(damping) || !(damping > 0) || damping > 1)
    throw InvalidParams("damping must lie in (0, 1]");

  const auto [lower, upper] = equilibrium_bounds(p, adj);
  w = w.cwiseMax(lower).cwiseMin(upper);

  Scalar lambda = damping;
  Scalar prev_delta = std::numeric_limits<Scalar>::infinity();
  Scalar delta = prev_delta;
  int stalled = 0;
  bool converged = false;
  int iters = 0;
  for (int k = 1; k <= max_iter; ++k) {
    Vector next = (1 - lambda) * w + lambda * h_map(p, adj, w);
    next = next.cwiseMax(lower).cwiseMin(upper);
    delta = (next - w).lpNorm<Eigen::Infinity>();
    w = std::move(next);
    iters = k;
    if (delta <= tol) {
      converged = true;
      break;
    }
    // Progress watchdog: plain iteration on H has no proven contraction
    // rate, so halve the step after 50 iterations without improvement.
    if (delta >= prev_delta) {
      if (++stalled >= 50) {
        lambda = std::max(lambda / 2, Scalar(1) / 16);
        stalled = 0;
      }
    } else {
      stalled = 0;
    }
    prev_delta = delta;
  }

  const Scalar fp_res = (h_map(p, adj, w) - w).lpNorm<Eigen::Infinity>();
  if (!converged)
    throw NoConvergence(w, fp_res, iters,
                        "no convergence after " + std::to_string(iters) +
                            " iterations (last step " + std::to_string(delta) +
                            ")");
  const Scalar rhs_res = rhs(p, adj, w).lpNorm<Eigen::Infinity>();
  const bool inside = (w.array() >= lower.array() - 1e-12).all() &&
                      (w.array() <= upper.array() + 1e-12).all();
  return {w, fp_res, rhs_res, iters, inside, limit_security(w)};
}

} // namespace

EquilibriumResult solve(const GscsParams& p, const Matrix& adj, Scalar tol,
                        int max_iter, Scalar damping) {
  const auto [lower, upper] = equilibrium_bounds(p, adj);
  return iterate(p, adj, (lower + upper) / 2, tol, max_iter, damping);
}

} // namespace detail

EquilibriumResult solve(const GscsParams& p, Scalar tol, int max_iter,
                        Scalar damping) {
  return detail::solve(p, p.graph().adjacency(), tol, max_iter, damping);
}

EquilibriumResult solve_from(const GscsParams& p, const Vector& w0, Scalar tol,
                             int max_iter, Scalar damping) {
  if (w0.size() != p.size())
    throw DimensionMismatch("start vector has length " +
                            std::to_string(w0.size()) + ", model has " +
                            std::to_string(p.size()) + " nodes");
  return detail::iterate(p, p.graph().adjacency(), w0, tol, max_iter, damping);
}

std::pair<Scalar, Scalar> residual(const GscsParams& p, const Vector& c) {
  return {(c - h_map(p, c)).lpNorm<Eigen::Infinity>(),
          rhs(p, c).lpNorm<Eigen::Infinity>()};
}

} // namespace gscs

#include "gscs/dynamics.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "gscs/errors.hpp"
#include "gscs/format.hpp"
#include "gscs/model.hpp"

namespace gscs {

namespace {

// One classic RK4 step of size h from state c.
Vector rk4_step(const GscsParams& p, const Vector& c, Scalar h) {
  const Vector k1 = rhs(p, c);
  const Vector k2 = rhs(p, c + (h / 2) * k1);
  const Vector k3 = rhs(p, c + (h / 2) * k2);
  const Vector k4 = rhs(p, c + h * k3);
  return c + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
}

// The vector field points inward on the boundary of [0,1]^N, so excursions
// beyond 1e-9 signal a step size problem, not roundoff.
Vector clamp_to_box(const Vector& c, Scalar t) {
  Vector out = c;
  for (int i = 0; i < c.size(); ++i) {
    if (c[i] < -1e-9 || c[i] > 1 + 1e-9)
      throw StepOutOfDomain("component " + std::to_string(i + 1) + " = " +
                            std::to_string(c[i]) + " left [0,1] at t = " +
                            std::to_string(t) + "; reduce dt");
    out[i] = std::min(std::max(c[i], Scalar(0)), Scalar(1));
  }
  return out;
}

} // namespace

Trajectory integrate(const GscsParams& p, const Vector& c0, Scalar t_end,
                     Scalar dt) {
  if (c0.size() != p.size())
    throw DimensionMismatch("initial state has length " +
                            std::to_string(c0.size()) + ", model has " +
                            std::to_string(p.size()) + " nodes");
  if (!std::isfinite(t_end) || !(t_end > 0))
    throw InvalidParams("t_end must be > 0");
  if (!std::isfinite(dt) || !(dt > 0) || dt > t_end)
    throw InvalidParams("dt must satisfy 0 < dt <= t_end");
  for (int i = 0; i < c0.size(); ++i)
    if (c0[i] < 0 || c0[i] > 1)
      throw StepOutOfDomain("initial state component " + std::to_string(i + 1) +
                            " outside [0,1]");

  const auto n_full = static_cast<long long>(std::floor(t_end / dt + 1e-9));
  const Scalar remainder = t_end - static_cast<Scalar>(n_full) * dt;
  const bool partial = remainder > dt * 1e-9;

  Trajectory traj;
  traj.params_digest = p.digest();
  traj.times.reserve(static_cast<size_t>(n_full) + 2);
  traj.states.reserve(static_cast<size_t>(n_full) + 2);
  traj.times.push_back(0);
  traj.states.push_back(c0);

  Vector c = c0;
  for (long long k = 1; k <= n_full; ++k) {
    const Scalar t = static_cast<Scalar>(k) * dt;
    c = clamp_to_box(rk4_step(p, c, dt), t);
    traj.times.push_back(k == n_full && !partial ? t_end : t);
    traj.states.push_back(c);
  }
  if (partial) {
    c = clamp_to_box(rk4_step(p, c, remainder), t_end);
    traj.times.push_back(t_end);
    traj.states.push_back(c);
  }
  return traj;
}

Scalar lyapunov_v(const Vector& c, const Vector& c_star) {
  if (c.size() != c_star.size())
    throw DimensionMismatch("state and equilibrium lengths differ");
  if (c_star.size() == 0) throw DimensionMismatch("empty state");
  if (c_star.minCoeff() <= 0)
    throw NonpositiveEquilibrium("equilibrium has a component <= 0");
  const Vector ratio = c.cwiseQuotient(c_star);
  const Scalar big = ratio.maxCoeff();
  const Scalar small = ratio.minCoeff();
  return std::max(big - 1, Scalar(0)) + std::max(1 - small, Scalar(0));
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                          const Vector* c_star, int thin) {
  if (thin < 1) throw InvalidParams("thinning factor must be >= 1");
  const size_t count = traj.times.size();
  const int n = count ? static_cast<int>(traj.states.front().size()) : 0;
  os << "t";
  for (int i = 0; i < n; ++i) os << ",C_" << (i + 1);
  os << ",C_mean";
  if (c_star) os << ",V";
  os << "\n";
  for (size_t k = 0; k < count; ++k) {
    if (k % thin != 0 && k + 1 != count) continue;
    os << format_double(traj.times[k]);
    for (int i = 0; i < n; ++i)
      os << "," << format_double(traj.states[k][i]);
    os << "," << format_double(mean_compromise(traj.states[k]));
    if (c_star)
      os << "," << format_double(lyapunov_v(traj.states[k], *c_star));
    os << "\n";
  }
}

} // namespace gscs

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gscs/params.hpp"
#include "gscs/types.hpp"

namespace gscs {

struct Trajectory {
  std::vector<Scalar> times;
  std::vector<Vector> states; // states[k] is the state at times[k]
  std::string params_digest;  // digest of the generating parameter set
};

/// Classic fixed-step RK4 from c0 over [0, t_end]. Steps of size dt with one
/// shorter final step so the last record lands exactly at t_end; every step
/// is recorded, including the initial state. Components may overshoot [0, 1]
/// by at most 1e-9 (clamped back); larger excursions throw StepOutOfDomain.
Trajectory integrate(const GscsParams& p, const Vector& c0, Scalar t_end,
                     Scalar dt);

/// Lyapunov-type distance of state c from the positive equilibrium c_star:
/// max(Z - 1, 0) + max(1 - z, 0) with Z, z the extreme ratios c_i / c_star_i.
/// Throws NonpositiveEquilibrium if any c_star_i <= 0.
Scalar lyapunov_v(const Vector& c, const Vector& c_star);

/// CSV export: header t,c_1,...,c_n (plus V when c_star is given), one row
/// per kept record; thin > 1 keeps every thin-th row plus the final one.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                          const Vector* c_star = nullptr, int thin = 1);

} // namespace gscs

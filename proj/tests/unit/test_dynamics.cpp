#include <cmath>
#include <sstream>

#include "doctest.h"
#include "gscs/dynamics.hpp"
#include "gscs/equilibrium.hpp"
#include "gscs/errors.hpp"
#include "gscs/model.hpp"
#include "test_support.hpp"

using namespace gscs;
using testsupport::Rng;

namespace {

const Graph two_cycle(2, {{0, 1}, {1, 0}}, false);

GscsParams beta_zero_two_cycle() {
  Vector x(2), y(2), z(2);
  x << 1.0, 0.4;
  y << 0.8, 1.1;
  z << 0.9, 0.6;
  return GscsParams(0.7, 0, 1.3, 0.9, x, y, z, two_cycle,
                    rational_infection());
}

// With beta = 0 each node decouples:
// C_i(t) = L_i + (c0_i - L_i) exp(-(alpha x_i/(delta y_i) + gamma z_i) t).
Vector closed_form_beta_zero(const GscsParams& p, const Vector& c0, Scalar t) {
  const Vector lower = equilibrium_bounds(p).first;
  Vector out(p.size());
  for (int i = 0; i < p.size(); ++i) {
    const Scalar rate =
        p.alpha() * p.x()[i] / (p.delta() * p.y()[i]) + p.gamma() * p.z()[i];
    out[i] = lower[i] + (c0[i] - lower[i]) * std::exp(-rate * t);
  }
  return out;
}

} // namespace

TEST_CASE("a stationary start stays put") {
  const auto p = beta_zero_two_cycle();
  const Vector lower = equilibrium_bounds(p).first;
  const Trajectory traj = integrate(p, lower, 5, 0.05);
  for (const Vector& state : traj.states)
    CHECK((state - lower).lpNorm<Eigen::Infinity>() <= 1e-12);
}

TEST_CASE("integrator matches the decoupled closed form") {
  const auto p = beta_zero_two_cycle();
  Vector c0(2);
  c0 << 0.95, 0.05;
  const Trajectory traj = integrate(p, c0, 10, 0.01);
  for (size_t k = 0; k < traj.times.size(); k += 100) {
    const Vector exact = closed_form_beta_zero(p, c0, traj.times[k]);
    CHECK((traj.states[k] - exact).lpNorm<Eigen::Infinity>() <= 1e-8);
  }
  const Vector exact_end = closed_form_beta_zero(p, c0, 10);
  CHECK((traj.states.back() - exact_end).lpNorm<Eigen::Infinity>() <= 1e-8);
}

TEST_CASE("halving the step shrinks the final error fourth-order") {
  const auto p = beta_zero_two_cycle();
  Vector c0(2);
  c0 << 0.9, 0.1;
  const Scalar t_end = 2.0;
  const Vector exact = closed_form_beta_zero(p, c0, t_end);
  const Scalar err_coarse =
      (integrate(p, c0, t_end, 0.2).states.back() - exact)
          .lpNorm<Eigen::Infinity>();
  const Scalar err_fine =
      (integrate(p, c0, t_end, 0.1).states.back() - exact)
          .lpNorm<Eigen::Infinity>();
  const Scalar ratio = err_coarse / err_fine;
  // 2^4 = 16 up to the next-order correction, which is still noticeable
  // at these step sizes
  CHECK(ratio >= 11.0);
  CHECK(ratio <= 23.0);
}

TEST_CASE("long runs land on the solved equilibrium") {
  Rng rng(31);
  for (int trial = 0; trial < 3; ++trial) {
    const auto p = testsupport::random_params(rng, tree_catalog()[trial * 2]);
    const Vector c_star = solve(p).c_star;
    const Vector c0 = testsupport::random_state(rng, 6);
    const Trajectory traj = integrate(p, c0, 500, 0.01);
    CHECK((traj.states.back() - c_star).lpNorm<Eigen::Infinity>() <= 1e-6);
  }
}

TEST_CASE("lyapunov value decreases along trajectories") {
  Rng rng(32);
  const auto p = testsupport::random_params(rng, catalog_graph("G2"));
  const Vector c_star = solve(p).c_star;
  const Trajectory traj = integrate(p, testsupport::random_state(rng, 6), 50,
                                    0.01);
  Scalar prev = std::numeric_limits<Scalar>::infinity();
  for (const Vector& state : traj.states) {
    const Scalar v = lyapunov_v(state, c_star);
    CHECK(v <= prev + 1e-7);
    prev = v;
  }
  CHECK(lyapunov_v(traj.states.back(), c_star) <= 1e-4);
}

TEST_CASE("overly large steps on a stiff setup are rejected") {
  Vector x = Vector::Ones(2), y = Vector::Ones(2), z = Vector::Ones(2);
  const GscsParams stiff(0.01, 0.1, 100, 1, x, y, z, two_cycle,
                         rational_infection());
  CHECK_THROWS_AS(integrate(stiff, Vector::Ones(2), 5, 0.1), StepOutOfDomain);
  // the same setup integrates cleanly at a small step
  CHECK_NOTHROW(integrate(stiff, Vector::Ones(2), 5, 0.001));
}

TEST_CASE("lyapunov distance closed forms") {
  Vector c_star(3);
  c_star << 0.2, 0.3, 0.1;
  CHECK(lyapunov_v(c_star, c_star) == 0);
  CHECK(lyapunov_v((2 * c_star).eval(), c_star) == doctest::Approx(1.0));
  CHECK(lyapunov_v((0.5 * c_star).eval(), c_star) == doctest::Approx(0.5));
  Vector bad = c_star;
  bad[1] = 0;
  CHECK_THROWS_AS(lyapunov_v(c_star, bad), NonpositiveEquilibrium);
  CHECK_THROWS_AS(lyapunov_v(Vector::Zero(2), c_star), DimensionMismatch);
}

TEST_CASE("time stamps hit t_end exactly, with and without a partial step") {
  const auto p = beta_zero_two_cycle();
  const Vector c0 = Vector::Constant(2, 0.5);

  const Trajectory whole = integrate(p, c0, 1.0, 0.1);
  CHECK(whole.times.size() == 11);
  CHECK(whole.times.front() == 0.0);
  CHECK(whole.times.back() == 1.0);

  const Trajectory partial = integrate(p, c0, 1.05, 0.1);
  CHECK(partial.times.size() == 12);
  CHECK(partial.times.back() == 1.05);
  CHECK(partial.times[10] == doctest::Approx(1.0).epsilon(1e-15));
  for (size_t k = 1; k < partial.times.size(); ++k)
    CHECK(partial.times[k] > partial.times[k - 1]);
  // the shortened last step still integrates accurately
  const Vector exact = closed_form_beta_zero(p, c0, 1.05);
  CHECK((partial.states.back() - exact).lpNorm<Eigen::Infinity>() <= 1e-5);
}

TEST_CASE("trajectory carries the parameter digest and the start state") {
  const auto p = beta_zero_two_cycle();
  const Vector c0 = Vector::Constant(2, 0.25);
  const Trajectory traj = integrate(p, c0, 1, 0.5);
  CHECK(traj.params_digest == p.digest());
  CHECK(traj.states.front() == c0);
}

TEST_CASE("integration argument validation") {
  const auto p = beta_zero_two_cycle();
  const Vector c0 = Vector::Constant(2, 0.5);
  CHECK_THROWS_AS(integrate(p, Vector::Zero(3), 1, 0.1), DimensionMismatch);
  CHECK_THROWS_AS(integrate(p, c0, 1, 2.0), InvalidParams); // dt > t_end
  CHECK_THROWS_AS(integrate(p, c0, -1, 0.1), InvalidParams);
  CHECK_THROWS_AS(integrate(p, c0, 1, 0.0), InvalidParams);
  Vector outside(2);
  outside << 1.5, 0.5;
  CHECK_THROWS_AS(integrate(p, outside, 1, 0.1), StepOutOfDomain);
}

TEST_CASE("csv export layout and thinning") {
  const auto p = beta_zero_two_cycle();
  const Trajectory traj = integrate(p, Vector::Constant(2, 0.5), 1.0, 0.1);

  std::ostringstream no_v;
  write_trajectory_csv(no_v, traj);
  std::istringstream lines(no_v.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "t,C_1,C_2,C_mean");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 11);

  std::ostringstream with_v;
  const Vector c_star = solve(p).c_star;
  write_trajectory_csv(with_v, traj, &c_star);
  std::string first_line = with_v.str().substr(0, with_v.str().find('\n'));
  CHECK(first_line == "t,C_1,C_2,C_mean,V");

  std::ostringstream thinned;
  write_trajectory_csv(thinned, traj, nullptr, 4);
  std::istringstream tlines(thinned.str());
  std::getline(tlines, header);
  int kept = 0;
  std::string last;
  for (std::string line; std::getline(tlines, line);) {
    ++kept;
    last = line;
  }
  CHECK(kept == 4); // indices 0, 4, 8 plus the final record
  CHECK(last.substr(0, 2) == "1,");
  CHECK_THROWS_AS(write_trajectory_csv(thinned, traj, nullptr, 0),
                  InvalidParams);
}

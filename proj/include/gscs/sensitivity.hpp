#pragma once

#include <optional>
#include <string>

#include "gscs/params.hpp"
#include "gscs/types.hpp"

namespace gscs {

/// Identifies one scalar model parameter: a global rate, one component of a
/// scheme vector, or one adjacency entry.
struct Parameter {
  enum class Kind { alpha, beta, gamma, delta, x, y, z, edge };

  Kind kind;
  int i = -1; // component (x/y/z) or arc tail (edge), 0-based
  int j = -1; // arc head (edge only), 0-based

  static Parameter global(Kind k);
  static Parameter component(Kind k, int i);
  static Parameter edge(int i, int j);

  /// Round-trips with name(): "alpha", "x_3", "a_2_5" (indices 1-based).
  static Parameter parse(const std::string& text);
  std::string name() const;
};

struct MetzlerMatrix {
  Matrix m;                 // Jacobian of the scaled equilibrium system
  Scalar spectral_abscissa; // max real part of its eigenvalues, < 0
  Vector c_star;            // equilibrium the matrix was built at
};

struct SensitivityReport {
  Parameter parameter;
  Vector d_c_star;                    // d c_star / d theta
  Scalar d_limit_security;            // d S_L / d theta = -mean(d_c_star)
  std::optional<Scalar> fd_rel_err;   // set by sensitivity_with_fd_check
  std::optional<bool> sign_ok;        // ditto: derivative signs as expected
};

/// The matrix M with off-diagonal (i,k) entry beta (1 - c*_i) f'(u_i) a_ki
/// and diagonal -(alpha x_i + gamma delta y_i z_i + f(u_i)), u = beta A^T c*.
/// Throws NotAnEquilibrium when the dynamics residual at c_star exceeds 1e-8.
MetzlerMatrix build_m(const GscsParams& p, const Vector& c_star);

/// Derivative of the equilibrium and of S_L with respect to one parameter,
/// from the linear system M s = -g.
SensitivityReport sensitivity_wrt(const GscsParams& p, const Vector& c_star,
                                  const Parameter& theta);

/// Central-difference derivative of the equilibrium (forward at an absent
/// adjacency entry, which sits on the boundary a_kl = 0). h = 0 selects the
/// default step 1e-5 * max(1, |theta|).
Vector finite_difference_oracle(const GscsParams& p, const Parameter& theta,
                                Scalar h = 0);

/// sensitivity_wrt plus the oracle comparison and the sign check.
SensitivityReport sensitivity_with_fd_check(const GscsParams& p,
                                            const Vector& c_star,
                                            const Parameter& theta);

} // namespace gscs

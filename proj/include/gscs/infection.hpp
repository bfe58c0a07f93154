#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gscs/types.hpp"

namespace gscs {

/// The generic infection saturation function f together with its analytic
/// first derivative. Contract (checked by validate_infection_function, not
/// at every call): f(0) = 0, f(x) <= x, strictly increasing, concave.
/// The analytic derivative is required because the sensitivity system needs
/// f' at the equilibrium.
struct InfectionFunction {
  std::function<Scalar(Scalar)> eval;
  std::function<Scalar(Scalar)> deriv;
  std::string name;
};

/// f(x) = x / (1 + x)
InfectionFunction rational_infection();
/// f(x) = x, the boundary case of the contract
InfectionFunction identity_infection();
/// f(x) = a (1 - exp(-x/a)), a > 0
InfectionFunction saturating_infection(Scalar a);

struct ValidationCheck {
  std::string name;
  bool passed;
  std::string detail; // first violation, or empty
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_passed() const;
};

/// 0..50 in 1001 uniform steps plus {1e-8, 1e-4}, sorted.
std::vector<Scalar> default_validation_grid();

/// Grid-based property checks: f(0)=0 exactly, f(x) <= x + 1e-12, strict
/// monotonicity, concavity via nonincreasing secant slopes, and
/// |f'(x) - difference quotient| <= 1e-6. The grid must be nonempty,
/// nonnegative and sorted. Failures are report entries, never exceptions.
ValidationReport validate_infection_function(const InfectionFunction& f,
                                             const std::vector<Scalar>& grid);

} // namespace gscs

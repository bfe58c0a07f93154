#include "gscs/infection.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "gscs/errors.hpp"

namespace gscs {

InfectionFunction rational_infection() {
  return {[](Scalar x) { return x / (1 + x); },
          [](Scalar x) { return 1 / ((1 + x) * (1 + x)); }, "rational"};
}

InfectionFunction identity_infection() {
  return {[](Scalar x) { return x; }, [](Scalar) { return Scalar(1); },
          "identity"};
}

InfectionFunction saturating_infection(Scalar a) {
  if (!(a > 0) || !std::isfinite(a))
    throw InvalidParams("saturating infection needs a > 0");
  char buf[64];
  std::snprintf(buf, sizeof buf, "saturating(a=%.17g)", a);
  return {[a](Scalar x) { return a * (1 - std::exp(-x / a)); },
          [a](Scalar x) { return std::exp(-x / a); }, buf};
}

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ValidationCheck& c) { return c.passed; });
}

std::vector<Scalar> default_validation_grid() {
  std::vector<Scalar> grid;
  grid.reserve(1003);
  grid.push_back(1e-8);
  grid.push_back(1e-4);
  for (int k = 0; k <= 1000; ++k) grid.push_back(50.0 * k / 1000.0);
  std::sort(grid.begin(), grid.end());
  return grid;
}

namespace {

std::string at_point(Scalar x, const std::string& what) {
  std::ostringstream os;
  os.precision(17);
  os << "x=" << x << ": " << what;
  return os.str();
}

// O(h^2) difference quotient for f' at x; one-sided when x sits close to the
// left end of the domain.
Scalar difference_quotient(const InfectionFunction& f, Scalar x, Scalar h) {
  if (x < h)
    return (-3 * f.eval(x) + 4 * f.eval(x + h) - f.eval(x + 2 * h)) / (2 * h);
  return (f.eval(x + h) - f.eval(x - h)) / (2 * h);
}

} // namespace

ValidationReport validate_infection_function(const InfectionFunction& f,
                                             const std::vector<Scalar>& grid) {
  if (grid.empty()) throw InvalidParams("validation grid is empty");
  if (grid.front() < 0) throw InvalidParams("validation grid must be nonnegative");
  if (!std::is_sorted(grid.begin(), grid.end()))
    throw InvalidParams("validation grid must be sorted");
  if (!f.eval || !f.deriv)
    throw InvalidParams("infection function is missing eval or deriv");

  ValidationReport report;
  auto add = [&](const std::string& name, bool passed, const std::string& detail) {
    report.checks.push_back({name, passed, passed ? "" : detail});
  };

  add("zero_at_origin", f.eval(0) == 0,
      at_point(0, "f(0) = " + std::to_string(f.eval(0))));

  {
    bool ok = true;
    std::string detail;
    for (Scalar x : grid) {
      Scalar v = f.eval(x);
      if (!(v <= x + 1e-12)) {
        ok = false;
        detail = at_point(x, "f(x) exceeds x + 1e-12");
        break;
      }
    }
    add("bounded_by_identity", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (size_t k = 0; k + 1 < grid.size(); ++k) {
      if (grid[k + 1] == grid[k]) continue;
      if (!(f.eval(grid[k + 1]) > f.eval(grid[k]))) {
        ok = false;
        detail = at_point(grid[k], "f not strictly increasing to next grid point");
        break;
      }
    }
    add("strictly_increasing", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    bool have_prev = false;
    Scalar prev_slope = 0;
    for (size_t k = 0; k + 1 < grid.size(); ++k) {
      if (grid[k + 1] == grid[k]) continue;
      Scalar slope = (f.eval(grid[k + 1]) - f.eval(grid[k])) / (grid[k + 1] - grid[k]);
      if (have_prev && !(slope <= prev_slope + 1e-12)) {
        ok = false;
        detail = at_point(grid[k], "secant slope increases (not concave)");
        break;
      }
      prev_slope = slope;
      have_prev = true;
    }
    add("concave", ok, detail);
  }

  {
    const Scalar h = 1e-6;
    bool ok = true;
    std::string detail;
    for (Scalar x : grid) {
      Scalar d = std::abs(f.deriv(x) - difference_quotient(f, x, h));
      if (!(d <= 1e-6)) {
        ok = false;
        detail = at_point(x, "analytic derivative off by " + std::to_string(d));
        break;
      }
    }
    add("derivative_consistent", ok, detail);
  }

  return report;
}

} // namespace gscs

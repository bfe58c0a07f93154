#include "gscs/sensitivity.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <charconv>
#include <cmath>
#include <string>

#include "gscs/equilibrium.hpp"
#include "gscs/errors.hpp"
#include "gscs/model.hpp"

namespace gscs {

namespace {

using Kind = Parameter::Kind;

bool is_global(Kind k) {
  return k == Kind::alpha || k == Kind::beta || k == Kind::gamma ||
         k == Kind::delta;
}

bool is_component(Kind k) {
  return k == Kind::x || k == Kind::y || k == Kind::z;
}

std::string kind_word(Kind k) {
  switch (k) {
    case Kind::alpha: return "alpha";
    case Kind::beta: return "beta";
    case Kind::gamma: return "gamma";
    case Kind::delta: return "delta";
    case Kind::x: return "x";
    case Kind::y: return "y";
    case Kind::z: return "z";
    case Kind::edge: return "a";
  }
  return "?";
}

// Parses a 1-based index; returns -1 on malformed input.
int parse_index(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v < 1) return -1;
  return v - 1;
}

void check_component(const GscsParams& p, const Parameter& theta) {
  if (theta.i < 0 || theta.i >= p.size())
    throw InvalidParams("parameter " + theta.name() + " index out of range");
}

void check_edge(const GscsParams& p, const Parameter& theta) {
  if (theta.i < 0 || theta.i >= p.size() || theta.j < 0 ||
      theta.j >= p.size() || theta.i == theta.j)
    throw InvalidEdge("parameter " + theta.name() + " is not a valid arc");
}

// dF/dtheta with F_i = alpha x_i - (alpha x_i + gamma delta y_i z_i) C*_i
// + (1 - C*_i) f(beta (A^T C*)_i); the row scaling that turns the ODE rhs
// into F cancels when solving M s = -g.
Vector g_vector(const GscsParams& p, const Vector& c_star,
                const Parameter& theta) {
  const int n = p.size();
  const Vector ac = p.graph().adjacency().transpose() * c_star;
  const Vector u = p.beta() * ac;
  Vector g = Vector::Zero(n);
  switch (theta.kind) {
    case Kind::alpha:
      for (int i = 0; i < n; ++i) g[i] = p.x()[i] * (1 - c_star[i]);
      break;
    case Kind::beta:
      for (int i = 0; i < n; ++i)
        g[i] = (1 - c_star[i]) * p.f().deriv(u[i]) * ac[i];
      break;
    case Kind::gamma:
      for (int i = 0; i < n; ++i)
        g[i] = -p.delta() * p.y()[i] * p.z()[i] * c_star[i];
      break;
    case Kind::delta:
      for (int i = 0; i < n; ++i)
        g[i] = -p.gamma() * p.y()[i] * p.z()[i] * c_star[i];
      break;
    case Kind::x:
      check_component(p, theta);
      g[theta.i] = p.alpha() * (1 - c_star[theta.i]);
      break;
    case Kind::y:
      check_component(p, theta);
      g[theta.i] = -p.gamma() * p.delta() * p.z()[theta.i] * c_star[theta.i];
      break;
    case Kind::z:
      check_component(p, theta);
      g[theta.i] = -p.gamma() * p.delta() * p.y()[theta.i] * c_star[theta.i];
      break;
    case Kind::edge:
      check_edge(p, theta);
      g[theta.j] = (1 - c_star[theta.j]) * p.f().deriv(u[theta.j]) *
                   p.beta() * c_star[theta.i];
      break;
  }
  return g;
}

int expected_sign(Kind k) {
  switch (k) {
    case Kind::alpha:
    case Kind::beta:
    case Kind::x:
    case Kind::edge:
      return +1;
    default:
      return -1;
  }
}

} // namespace

Parameter Parameter::global(Kind k) {
  if (!is_global(k)) throw InvalidParams("not a global parameter kind");
  return {k, -1, -1};
}

Parameter Parameter::component(Kind k, int i) {
  if (!is_component(k)) throw InvalidParams("not a per-node parameter kind");
  return {k, i, -1};
}

Parameter Parameter::edge(int i, int j) {
  if (i == j) throw InvalidEdge("arc parameter needs two distinct nodes");
  return {Kind::edge, i, j};
}

Parameter Parameter::parse(const std::string& text) {
  for (Kind k : {Kind::alpha, Kind::beta, Kind::gamma, Kind::delta})
    if (text == kind_word(k)) return global(k);
  const auto bad = [&] {
    return InvalidParams("cannot parse parameter '" + text +
                         "' (expected alpha|beta|gamma|delta|x_i|y_i|z_i|a_i_j)");
  };
  if (text.size() < 3 || text[1] != '_') throw bad();
  std::string_view rest(text);
  rest.remove_prefix(2);
  if (text[0] == 'x' || text[0] == 'y' || text[0] == 'z') {
    const int i = parse_index(rest);
    if (i < 0) throw bad();
    const Kind k = text[0] == 'x' ? Kind::x : text[0] == 'y' ? Kind::y : Kind::z;
    return component(k, i);
  }
  if (text[0] == 'a') {
    const auto sep = rest.find('_');
    if (sep == std::string_view::npos) throw bad();
    const int i = parse_index(rest.substr(0, sep));
    const int j = parse_index(rest.substr(sep + 1));
    if (i < 0 || j < 0 || i == j) throw bad();
    return edge(i, j);
  }
  throw bad();
}

std::string Parameter::name() const {
  if (is_global(kind)) return kind_word(kind);
  if (kind == Kind::edge)
    return "a_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
  return kind_word(kind) + "_" + std::to_string(i + 1);
}

MetzlerMatrix build_m(const GscsParams& p, const Vector& c_star) {
  if (c_star.size() != p.size())
    throw DimensionMismatch("equilibrium has length " +
                            std::to_string(c_star.size()) + ", model has " +
                            std::to_string(p.size()) + " nodes");
  const Scalar res = rhs(p, c_star).lpNorm<Eigen::Infinity>();
  if (!(res <= 1e-8))
    throw NotAnEquilibrium("rhs residual " + std::to_string(res) +
                           " exceeds 1e-8; solve first");

  const int n = p.size();
  const Matrix& adj = p.graph().adjacency();
  const Vector u = p.beta() * (adj.transpose() * c_star);
  Vector scale(n), drain(n);
  for (int i = 0; i < n; ++i) {
    scale[i] = p.beta() * (1 - c_star[i]) * p.f().deriv(u[i]);
    drain[i] = p.alpha() * p.x()[i] +
               p.gamma() * p.delta() * p.y()[i] * p.z()[i] + p.f().eval(u[i]);
  }
  Matrix m = scale.asDiagonal() * adj.transpose();
  m.diagonal() -= drain;

  const Eigen::EigenSolver<Matrix> es(m);
  const Scalar abscissa = es.eigenvalues().real().maxCoeff();
  return {std::move(m), abscissa, c_star};
}

SensitivityReport sensitivity_wrt(const GscsParams& p, const Vector& c_star,
                                  const Parameter& theta) {
  const MetzlerMatrix mm = build_m(p, c_star);
  const Vector g = g_vector(p, c_star, theta);
  const Eigen::FullPivLU<Matrix> lu(mm.m);
  if (!lu.isInvertible())
    throw SingularMatrix("sensitivity matrix is numerically singular");
  const Vector s = lu.solve((-g).eval());
  return {theta, s, -s.mean(), std::nullopt, std::nullopt};
}

Vector finite_difference_oracle(const GscsParams& p, const Parameter& theta,
                                Scalar h) {
  const Scalar tol = 1e-12;
  const int max_iter = 100000;

  if (theta.kind == Kind::edge) {
    check_edge(p, theta);
    const Matrix& adj = p.graph().adjacency();
    const Scalar cur = adj(theta.i, theta.j);
    if (h <= 0) h = 1e-5;
    Matrix bumped = adj;
    if (cur == 0) {
      // The entry sits on the boundary of its admissible range, so use a
      // one-sided difference on [0, h].
      bumped(theta.i, theta.j) = h;
      const Vector plus = detail::solve(p, bumped, tol, max_iter, 1.0).c_star;
      const Vector base = detail::solve(p, adj, tol, max_iter, 1.0).c_star;
      return (plus - base) / h;
    }
    bumped(theta.i, theta.j) = cur + h;
    const Vector plus = detail::solve(p, bumped, tol, max_iter, 1.0).c_star;
    bumped(theta.i, theta.j) = cur - h;
    const Vector minus = detail::solve(p, bumped, tol, max_iter, 1.0).c_star;
    return (plus - minus) / (2 * h);
  }

  Scalar value = 0;
  switch (theta.kind) {
    case Kind::alpha: value = p.alpha(); break;
    case Kind::beta: value = p.beta(); break;
    case Kind::gamma: value = p.gamma(); break;
    case Kind::delta: value = p.delta(); break;
    default:
      check_component(p, theta);
      value = (theta.kind == Kind::x   ? p.x()
               : theta.kind == Kind::y ? p.y()
                                       : p.z())[theta.i];
  }
  if (h <= 0) h = 1e-5 * std::max(Scalar(1), std::abs(value));

  const auto with_value = [&](Scalar v) {
    Scalar a = p.alpha(), b = p.beta(), c = p.gamma(), d = p.delta();
    Vector x = p.x(), y = p.y(), z = p.z();
    switch (theta.kind) {
      case Kind::alpha: a = v; break;
      case Kind::beta: b = v; break;
      case Kind::gamma: c = v; break;
      case Kind::delta: d = v; break;
      case Kind::x: x[theta.i] = v; break;
      case Kind::y: y[theta.i] = v; break;
      case Kind::z: z[theta.i] = v; break;
      case Kind::edge: break;
    }
    return GscsParams(a, b, c, d, std::move(x), std::move(y), std::move(z),
                      p.graph(), p.f());
  };
  const Vector plus = solve(with_value(value + h), tol, max_iter).c_star;
  const Vector minus = solve(with_value(value - h), tol, max_iter).c_star;
  return (plus - minus) / (2 * h);
}

SensitivityReport sensitivity_with_fd_check(const GscsParams& p,
                                            const Vector& c_star,
                                            const Parameter& theta) {
  SensitivityReport rep = sensitivity_wrt(p, c_star, theta);
  const Vector fd = finite_difference_oracle(p, theta);
  const Scalar denom = std::max({fd.lpNorm<Eigen::Infinity>(),
                                 rep.d_c_star.lpNorm<Eigen::Infinity>(),
                                 Scalar(1e-30)});
  rep.fd_rel_err = (rep.d_c_star - fd).lpNorm<Eigen::Infinity>() / denom;
  const int sign = expected_sign(theta.kind);
  rep.sign_ok = sign > 0 ? (rep.d_c_star.array() > 0).all()
                         : (rep.d_c_star.array() < 0).all();
  return rep;
}

} // namespace gscs

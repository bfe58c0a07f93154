#include "gscs/model.hpp"

#include <string>

#include "gscs/errors.hpp"

namespace gscs {

namespace detail {

namespace {

void check_state_size(const GscsParams& p, const Vector& c, const char* label) {
  if (c.size() != p.size())
    throw DimensionMismatch(std::string(label) + " has length " +
                            std::to_string(c.size()) + ", model has " +
                            std::to_string(p.size()) + " nodes");
}

} // namespace

Vector rhs(const GscsParams& p, const Matrix& adj, const Vector& c) {
  check_state_size(p, c, "state");
  const Vector u = p.beta() * (adj.transpose() * c);
  Vector out(p.size());
  for (int i = 0; i < p.size(); ++i) {
    const Scalar attack = p.alpha() * p.x()[i] / (p.delta() * p.y()[i]);
    out[i] = attack - (attack + p.gamma() * p.z()[i]) * c[i] +
             (1 - c[i]) * p.f().eval(u[i]) / (p.delta() * p.y()[i]);
  }
  return out;
}

std::pair<Vector, Vector> equilibrium_bounds(const GscsParams& p,
                                             const Matrix& adj) {
  const Vector indeg = adj.colwise().sum();
  Vector lower(p.size()), upper(p.size());
  for (int i = 0; i < p.size(); ++i) {
    const Scalar ax = p.alpha() * p.x()[i];
    const Scalar defense = p.gamma() * p.delta() * p.y()[i] * p.z()[i];
    const Scalar fin = p.f().eval(p.beta() * indeg[i]);
    lower[i] = ax / (ax + defense);
    upper[i] = (ax + fin) / (ax + defense + fin);
  }
  return {lower, upper};
}

Vector h_map(const GscsParams& p, const Matrix& adj, const Vector& w) {
  check_state_size(p, w, "state");
  const Vector u = p.beta() * (adj.transpose() * w);
  Vector out(p.size());
  for (int i = 0; i < p.size(); ++i) {
    const Scalar ax = p.alpha() * p.x()[i];
    const Scalar defense = p.gamma() * p.delta() * p.y()[i] * p.z()[i];
    const Scalar fv = p.f().eval(u[i]);
    out[i] = (ax + fv) / (ax + defense + fv);
  }
  return out;
}

} // namespace detail

Vector rhs(const GscsParams& p, const Vector& c) {
  return detail::rhs(p, p.graph().adjacency(), c);
}

std::pair<Vector, Vector> equilibrium_bounds(const GscsParams& p) {
  return detail::equilibrium_bounds(p, p.graph().adjacency());
}

Vector h_map(const GscsParams& p, const Vector& w) {
  return detail::h_map(p, p.graph().adjacency(), w);
}

Scalar mean_compromise(const Vector& c) { return c.mean(); }

Scalar limit_security(const Vector& c_star) { return 1 - c_star.mean(); }

} // namespace gscs

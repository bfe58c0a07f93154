#pragma once

#include <string>
#include <utility>

#include "gscs/graph.hpp"
#include "gscs/infection.hpp"
#include "gscs/types.hpp"

namespace gscs {

/// Full parameterization of the attack-defense model:
///   alpha  external-attack technical level, >= 0
///   beta   internal-infection technical level, >= 0
///   gamma  recovery technical level, > 0
///   delta  prevention technical level, > 0
///   x      attack scheme, x_i >= 0 with sum x_i > 0
///   y      prevention scheme, y_i > 0
///   z      recovery scheme, z_i > 0
/// All vectors have length graph.size(). Validated at construction,
/// immutable afterwards.
class GscsParams {
public:
  GscsParams(Scalar alpha, Scalar beta, Scalar gamma, Scalar delta,
             Vector x, Vector y, Vector z, Graph graph, InfectionFunction f);

  Scalar alpha() const { return alpha_; }
  Scalar beta() const { return beta_; }
  Scalar gamma() const { return gamma_; }
  Scalar delta() const { return delta_; }
  const Vector& x() const { return x_; }
  const Vector& y() const { return y_; }
  const Vector& z() const { return z_; }
  const Graph& graph() const { return graph_; }
  const InfectionFunction& f() const { return f_; }
  int size() const { return graph_.size(); }

  /// FNV-1a hash over all numeric content and the f name; identifies the
  /// parameter set in trajectory exports.
  std::string digest() const;

private:
  Scalar alpha_, beta_, gamma_, delta_;
  Vector x_, y_, z_;
  Graph graph_;
  InfectionFunction f_;
};

} // namespace gscs

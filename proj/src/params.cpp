#include "gscs/params.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>

#include "gscs/errors.hpp"

namespace gscs {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw InvalidParams(msg);
}

void check_vector(const Vector& v, int n, const char* label) {
  if (static_cast<int>(v.size()) != n)
    throw DimensionMismatch(std::string(label) + " has length " +
                            std::to_string(v.size()) + ", graph has " +
                            std::to_string(n) + " nodes");
  for (int i = 0; i < n; ++i)
    require(std::isfinite(v[i]), std::string(label) + " has a non-finite entry");
}

} // namespace

GscsParams::GscsParams(Scalar alpha, Scalar beta, Scalar gamma, Scalar delta,
                       Vector x, Vector y, Vector z, Graph graph,
                       InfectionFunction f)
    : alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta),
      x_(std::move(x)), y_(std::move(y)), z_(std::move(z)),
      graph_(std::move(graph)), f_(std::move(f)) {
  require(std::isfinite(alpha_) && alpha_ >= 0, "alpha must be >= 0");
  require(std::isfinite(beta_) && beta_ >= 0, "beta must be >= 0");
  require(std::isfinite(gamma_) && gamma_ > 0, "gamma must be > 0");
  require(std::isfinite(delta_) && delta_ > 0, "delta must be > 0");
  const int n = graph_.size();
  check_vector(x_, n, "x");
  check_vector(y_, n, "y");
  check_vector(z_, n, "z");
  require(x_.minCoeff() >= 0, "x entries must be >= 0");
  require(x_.sum() > 0, "x must have positive total");
  require(y_.minCoeff() > 0, "y entries must be > 0");
  require(z_.minCoeff() > 0, "z entries must be > 0");
  require(static_cast<bool>(f_.eval) && static_cast<bool>(f_.deriv),
          "infection function is missing eval or deriv");
}

std::string GscsParams::digest() const {
  // FNV-1a over the raw numeric content plus the f name.
  std::uint64_t h = 1469598103934665603ull;
  auto mix_bytes = [&h](const void* p, size_t len) {
    const auto* b = static_cast<const unsigned char*>(p);
    for (size_t k = 0; k < len; ++k) {
      h ^= b[k];
      h *= 1099511628211ull;
    }
  };
  auto mix = [&](Scalar v) { mix_bytes(&v, sizeof v); };
  mix(alpha_);
  mix(beta_);
  mix(gamma_);
  mix(delta_);
  for (const Vector* v : {&x_, &y_, &z_})
    for (int i = 0; i < v->size(); ++i) mix((*v)[i]);
  const int n = graph_.size();
  mix_bytes(&n, sizeof n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mix(graph_.adjacency()(i, j));
  mix_bytes(f_.name.data(), f_.name.size());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

} // namespace gscs

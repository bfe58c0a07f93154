#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "gscs/types.hpp"

namespace gscs {

/// Base class for all domain errors. `name()` is a stable machine-readable
/// identifier (it ends up in CLI error JSON and sweep error columns).
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

class InvalidEdge : public Error {
public:
  explicit InvalidEdge(const std::string& msg) : Error("InvalidEdge", msg) {}
};

class EdgeExists : public Error {
public:
  explicit EdgeExists(const std::string& msg) : Error("EdgeExists", msg) {}
};

/// Carries one ordered pair (from, to) with no directed path from->to.
class NotStronglyConnected : public Error {
public:
  NotStronglyConnected(int from, int to, const std::string& msg)
      : Error("NotStronglyConnected", msg), from_(from), to_(to) {}
  int from() const { return from_; }
  int to() const { return to_; }

private:
  int from_;
  int to_;
};

class DimensionMismatch : public Error {
public:
  explicit DimensionMismatch(const std::string& msg) : Error("DimensionMismatch", msg) {}
};

class InvalidParams : public Error {
public:
  explicit InvalidParams(const std::string& msg) : Error("InvalidParams", msg) {}
};

class InvalidTolerance : public Error {
public:
  explicit InvalidTolerance(const std::string& msg) : Error("InvalidTolerance", msg) {}
};

/// Fixed-point iteration ran out of iterations; keeps the last iterate so
/// callers can inspect how close it got.
class NoConvergence : public Error {
public:
  NoConvergence(Vector last_iterate, Scalar residual, int iterations, const std::string& msg)
      : Error("NoConvergence", msg),
        last_iterate_(std::move(last_iterate)),
        residual_(residual),
        iterations_(iterations) {}
  const Vector& last_iterate() const { return last_iterate_; }
  Scalar residual() const { return residual_; }
  int iterations() const { return iterations_; }

private:
  Vector last_iterate_;
  Scalar residual_;
  int iterations_;
};

class StepOutOfDomain : public Error {
public:
  explicit StepOutOfDomain(const std::string& msg) : Error("StepOutOfDomain", msg) {}
};

class NonpositiveEquilibrium : public Error {
public:
  explicit NonpositiveEquilibrium(const std::string& msg)
      : Error("NonpositiveEquilibrium", msg) {}
};

class NotAnEquilibrium : public Error {
public:
  explicit NotAnEquilibrium(const std::string& msg) : Error("NotAnEquilibrium", msg) {}
};

class SingularMatrix : public Error {
public:
  explicit SingularMatrix(const std::string& msg) : Error("SingularMatrix", msg) {}
};

class ZeroDegree : public Error {
public:
  explicit ZeroDegree(const std::string& msg) : Error("ZeroDegree", msg) {}
};

/// Malformed or unusable configuration input (CLI exit code 2, as opposed to
/// model-domain errors which exit with 1).
class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& msg) : Error("ConfigError", msg) {}
};

} // namespace gscs

#pragma once

#include <stdexcept>
#include <string>

#include "resolab/tolerances.hpp"

namespace resolab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateInput : public Error {
 public:
  explicit DegenerateInput(const std::string& what) : Error("degenerate input: " + what) {}
};

class PoleEvaluation : public Error {
 public:
  PoleEvaluation(cplx z, cplx pole);
  cplx point() const { return point_; }
  cplx pole() const { return pole_; }

 private:
  cplx point_;
  cplx pole_;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class NonIntegrable : public Error {
 public:
  explicit NonIntegrable(const std::string& what) : Error("non-integrable coupling: " + what) {}
};

class HolomorphicPoint : public Error {
 public:
  explicit HolomorphicPoint(cplx z);
};

/// Model document does not follow the schema; `path` is a JSON pointer.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& what)
      : Error("schema violation at " + path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// A model invariant (Hermiticity, real-regularity, decay) fails.
class InvariantError : public Error {
 public:
  InvariantError(std::string invariant, const std::string& what)
      : Error("invariant '" + invariant + "' violated: " + what), invariant_(std::move(invariant)) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

class NoNullVector : public Error {
 public:
  explicit NoNullVector(const std::string& what) : Error("no null vector: " + what) {}
};

class ConjugatePole : public Error {
 public:
  explicit ConjugatePole(cplx zeta);
};

class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, cplx estimate, double error)
      : Error(what), estimate_(estimate), error_(error) {}
  cplx estimate() const { return estimate_; }
  double error_estimate() const { return error_; }

 private:
  cplx estimate_;
  double error_;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class ContourError : public Error {
 public:
  using Error::Error;
};

}  // namespace resolab

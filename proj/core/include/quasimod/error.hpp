#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quasimod {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class UnknownPoint : public Error {
 public:
  explicit UnknownPoint(const std::string& id) : Error("unknown point '" + id + "'"), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

// Raised when an input that must satisfy an axiom does not. Carries the
// offending points and parameters so callers can report a witness.
class AxiomError : public Error {
 public:
  AxiomError(std::string axiom, std::vector<std::string> points, std::vector<double> params,
             const std::string& what)
      : Error(what), axiom_(std::move(axiom)), points_(std::move(points)), params_(std::move(params)) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::vector<double>& params() const noexcept { return params_; }

 private:
  std::string axiom_;
  std::vector<std::string> points_;
  std::vector<double> params_;
};

// A scale function that was required to be nonincreasing was observed to
// increase between two probed scales.
class NonMonotoneError : public Error {
 public:
  NonMonotoneError(double lo_scale, double lo_value, double hi_scale, double hi_value);

  double lower_scale() const noexcept { return lo_scale_; }
  double upper_scale() const noexcept { return hi_scale_; }
  double lower_value() const noexcept { return lo_value_; }
  double upper_value() const noexcept { return hi_value_; }

 private:
  double lo_scale_, lo_value_, hi_scale_, hi_value_;
};

}  // namespace quasimod

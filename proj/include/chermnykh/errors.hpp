#pragma once

#include <stdexcept>
#include <string>

namespace chermnykh {

/// Position or argument outside the domain of a formula (r <= 0, singular x, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parameter bundle that violates a model invariant.
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Iterative method failed to converge. Carries the bracket it was working on.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double lo, double hi)
      : std::runtime_error(what), lo_(lo), hi_(hi) {}
  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  double lo_;
  double hi_;
};

/// Series expansion requested on a branch where it has no real value.
class BranchError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Series expansion undefined for the parameters (A2 = 0, d1 = 0).
class DegenerateSeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input to an operation that requires an equilibrium is not one.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace chermnykh

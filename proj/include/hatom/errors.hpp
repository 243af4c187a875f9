#pragma once

#include <stdexcept>
#include <string>

namespace hatom {

/// Argument outside the mathematical domain of a function (e.g. |x| >= 1 for D^1_n).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Result would not be representable (factorial overflow and friends).
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Index outside its admissible range, e.g. a Slater term index t > N - l - 1.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Caller-side contract violation that is not a plain domain issue.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature ran out of panels before meeting its tolerance.
/// Carries the best estimate so callers can still report it.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_real, double best_imag,
                   double error_bound)
      : std::runtime_error(what),
        best_real_(best_real),
        best_imag_(best_imag),
        error_bound_(error_bound) {}

  double best_real() const noexcept { return best_real_; }
  double best_imag() const noexcept { return best_imag_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double best_real_;
  double best_imag_;
  double error_bound_;
};

}  // namespace hatom

#pragma once

#include <stdexcept>
#include <string>

namespace hzml {

/// Precondition violated (argument outside the supported range).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base of every condition that signals a numerically untrustworthy result.
class NumericalAlarm : public std::runtime_error {
 public:
  NumericalAlarm(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class PoleProximityError : public NumericalAlarm {
 public:
  explicit PoleProximityError(const std::string& what) : NumericalAlarm("pole_proximity", what) {}
};

/// Z^(j)(t) came out with a non-negligible imaginary part.
class BranchError : public NumericalAlarm {
 public:
  explicit BranchError(const std::string& what) : NumericalAlarm("branch_error", what) {}
};

/// A conjugate-paired sum was expected to be real and was not.
class ImaginaryLeakError : public NumericalAlarm {
 public:
  explicit ImaginaryLeakError(const std::string& what) : NumericalAlarm("imaginary_leak", what) {}
};

class ConvergenceError : public NumericalAlarm {
 public:
  explicit ConvergenceError(const std::string& what) : NumericalAlarm("convergence", what) {}
};

class AccuracyError : public NumericalAlarm {
 public:
  explicit AccuracyError(const std::string& what) : NumericalAlarm("accuracy", what) {}
};

class QuadratureError : public NumericalAlarm {
 public:
  explicit QuadratureError(const std::string& what) : NumericalAlarm("quadrature", what) {}
};

/// Zero census deviates from the Riemann-von Mangoldt count beyond its bound.
class CompletenessAlarm : public NumericalAlarm {
 public:
  explicit CompletenessAlarm(const std::string& what) : NumericalAlarm("count_check", what) {}
};

}  // namespace hzml

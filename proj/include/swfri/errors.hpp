#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace swfri {

class InvalidLambda : public std::invalid_argument {
 public:
  explicit InvalidLambda(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

// No x in [0,1] reaches the threshold: T(d, x) <= min(d, x) < b.
class UnsatisfiableThreshold : public std::domain_error {
 public:
  UnsatisfiableThreshold(double coefficient, double threshold);
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidAssignment : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Enumeration was requested on an instance whose feasible region is empty.
class InfeasibleCall : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ValidationIssue {
  std::string field;               // "lambda", "A", "b1", "D", "b2"
  std::optional<std::size_t> row;  // 0-based
  std::optional<std::size_t> col;  // 0-based
  std::optional<double> value;
  std::string message;
};

class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<ValidationIssue> issues);
  const std::vector<ValidationIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<ValidationIssue> issues_;
};

}  // namespace swfri

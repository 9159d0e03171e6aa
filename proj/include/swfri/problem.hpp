#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "swfri/errors.hpp"
#include "swfri/tnorm.hpp"

namespace swfri {

// Dense row-major matrix of membership grades.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  // Throws DimensionMismatch on ragged input. An empty outer vector gives a
  // 0 x cols matrix, so the column count must be supplied separately.
  static Matrix from_rows(const std::vector<std::vector<double>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }

  std::vector<std::vector<double>> to_rows() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Unvalidated instance as it comes off the wire. "A"/"b1" may both be empty
// (no upper system).
struct RawProblem {
  std::optional<double> lambda;
  std::vector<std::vector<double>> a;
  std::vector<double> b_upper;
  std::vector<std::vector<double>> d;
  std::vector<double> b_lower;
};

// A validated instance of
//   min max_j x_j  s.t.  A phi x <= b1,  D phi x >= b2,  x in [0,1]^n.
// Immutable after construction.
class Problem {
 public:
  // Throws ValidationError listing every violation.
  static Problem create(const RawProblem& raw);

  std::size_t num_vars() const noexcept { return d_.cols(); }
  std::size_t num_upper() const noexcept { return a_.rows(); }
  std::size_t num_lower() const noexcept { return d_.rows(); }

  const Matrix& a() const noexcept { return a_; }
  const Matrix& d() const noexcept { return d_; }
  std::span<const double> b_upper() const noexcept { return b_upper_; }
  std::span<const double> b_lower() const noexcept { return b_lower_; }
  Lambda lambda() const noexcept { return lambda_; }

  RawProblem to_raw() const;

 private:
  Problem(Matrix a, std::vector<double> b_upper, Matrix d, std::vector<double> b_lower,
          Lambda lambda)
      : a_(std::move(a)),
        b_upper_(std::move(b_upper)),
        d_(std::move(d)),
        b_lower_(std::move(b_lower)),
        lambda_(lambda) {}

  friend std::variant<Problem, std::vector<ValidationIssue>> validate(const RawProblem& raw);

  Matrix a_;
  std::vector<double> b_upper_;
  Matrix d_;
  std::vector<double> b_lower_;
  Lambda lambda_;
};

// Returns the validated problem or the complete list of violations.
std::variant<Problem, std::vector<ValidationIssue>> validate(const RawProblem& raw);

}  // namespace swfri

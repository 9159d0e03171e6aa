#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "swfri/system.hpp"

namespace swfri {

using BigCount = boost::multiprecision::cpp_int;

// Per-row minimal activation values v(i,j) = smallest x_j that alone
// satisfies >=-row i, for every j in J2_i, with the mask of pairs whose
// single-row minimal solution fits under the maximum solution.
class CandidateMatrix {
 public:
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  // NaN outside J2_i.
  double value(std::size_t i, std::size_t j) const noexcept { return values_[i * cols_ + j]; }
  bool admissible(std::size_t i, std::size_t j) const noexcept {
    return admissible_[i * cols_ + j] != 0;
  }
  bool feasible(std::size_t i, std::size_t j) const noexcept {
    return feasible_[i * cols_ + j] != 0;
  }
  // b2_i == 0: the zero vector already satisfies the row.
  bool vacuous(std::size_t i) const noexcept { return vacuous_[i] != 0; }

  std::vector<std::size_t> feasible_columns(std::size_t i) const;

  const std::vector<double>& x_max() const noexcept { return x_max_; }
  bool joint_feasible() const noexcept { return joint_feasible_; }
  double tolerance() const noexcept { return tolerance_; }

  // |E| = prod_i |J2_i|, exact.
  const BigCount& assignment_count() const noexcept { return assignment_count_; }

  // Copy whose mask additionally requires v(i,j) <= cap.
  CandidateMatrix restricted_to(double cap) const;

  friend CandidateMatrix build_candidates(const Problem& problem, const FeasibilityReport& report,
                                          double tol);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
  std::vector<std::uint8_t> admissible_;
  std::vector<std::uint8_t> feasible_;
  std::vector<std::uint8_t> vacuous_;
  std::vector<double> x_max_;
  bool joint_feasible_ = false;
  double tolerance_ = kDefaultTolerance;
  BigCount assignment_count_;
};

CandidateMatrix build_candidates(const Problem& problem, const FeasibilityReport& report,
                                 double tol = kDefaultTolerance);

struct MinimalSolution {
  std::vector<double> x;
  double objective = 0.0;
  // One 0-based column per >=-row; present only when requested.
  std::optional<std::vector<std::size_t>> witness;
};

// x(e)_j = max{v(i,j) : e(i) = j}, 0 where no row picks j.
// Throws InvalidAssignment if e has the wrong length or e(i) is outside J2_i.
MinimalSolution assemble(std::span<const std::size_t> assignment,
                         const CandidateMatrix& candidates);

// z* = max over rows of the smallest masked value in that row; nullopt when
// some row has no masked column (empty feasible region).
std::optional<double> optimal_value(const CandidateMatrix& candidates);

}  // namespace swfri

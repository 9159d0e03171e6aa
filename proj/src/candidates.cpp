#include "swfri/candidates.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace swfri {

CandidateMatrix build_candidates(const Problem& problem, const FeasibilityReport& report,
                                 double tol) {
  CandidateMatrix c;
  c.rows_ = problem.num_lower();
  c.cols_ = problem.num_vars();
  c.values_.assign(c.rows_ * c.cols_, std::numeric_limits<double>::quiet_NaN());
  c.admissible_.assign(c.rows_ * c.cols_, 0);
  c.feasible_.assign(c.rows_ * c.cols_, 0);
  c.vacuous_.assign(c.rows_, 0);
  c.x_max_ = report.x_max;
  c.joint_feasible_ = report.joint_feasible;
  c.tolerance_ = tol;
  c.assignment_count_ = 1;

  const auto b = problem.b_lower();
  const auto& d = problem.d();
  for (std::size_t i = 0; i < c.rows_; ++i) {
    c.vacuous_[i] = b[i] == 0.0;
    c.assignment_count_ *= report.j2_sets[i].size();
    for (std::size_t j : report.j2_sets[i]) {
      const std::size_t k = i * c.cols_ + j;
      c.values_[k] = residual_geq(problem.lambda(), d(i, j), b[i]);
      c.admissible_[k] = 1;
      c.feasible_[k] = c.values_[k] <= c.x_max_[j] + tol;
    }
  }
  return c;
}

std::vector<std::size_t> CandidateMatrix::feasible_columns(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < cols_; ++j)
    if (feasible(i, j)) out.push_back(j);
  return out;
}

CandidateMatrix CandidateMatrix::restricted_to(double cap) const {
  CandidateMatrix c = *this;
  for (std::size_t k = 0; k < c.feasible_.size(); ++k)
    if (c.feasible_[k] && !(c.values_[k] <= cap)) c.feasible_[k] = 0;
  return c;
}

MinimalSolution assemble(std::span<const std::size_t> assignment,
                         const CandidateMatrix& candidates) {
  if (assignment.size() != candidates.rows())
    throw InvalidAssignment("assignment has " + std::to_string(assignment.size()) +
                            " entries, expected " + std::to_string(candidates.rows()));
  MinimalSolution sol;
  sol.x.assign(candidates.cols(), 0.0);
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    const std::size_t j = assignment[i];
    if (j >= candidates.cols() || !candidates.admissible(i, j))
      throw InvalidAssignment("row " + std::to_string(i + 1) + ": column " +
                              std::to_string(j + 1) + " is not in J2");
    const double v = candidates.value(i, j);
    sol.x[j] = std::max(sol.x[j], v);
    sol.objective = std::max(sol.objective, v);
  }
  sol.witness.emplace(assignment.begin(), assignment.end());
  return sol;
}

std::optional<double> optimal_value(const CandidateMatrix& candidates) {
  double z = 0.0;
  for (std::size_t i = 0; i < candidates.rows(); ++i) {
    double row_min = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < candidates.cols(); ++j)
      if (candidates.feasible(i, j)) row_min = std::min(row_min, candidates.value(i, j));
    if (row_min == std::numeric_limits<double>::infinity()) return std::nullopt;
    z = std::max(z, row_min);
  }
  return z;
}

}  // namespace swfri

#include "swfri/system.hpp"

#include <algorithm>
#include <string>

namespace swfri {

namespace {

void require_length(std::span<const double> x, std::size_t n) {
  if (x.size() != n)
    throw DimensionMismatch("vector of length " + std::to_string(x.size()) +
                            " does not match " + std::to_string(n) + " columns");
}

}  // namespace

std::vector<double> max_composition(Lambda lambda, const Matrix& m, std::span<const double> x) {
  require_length(x, m.cols());
  std::vector<double> out(m.rows(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto row = m.row(i);
    double best = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) best = std::max(best, tnorm(lambda, row[j], x[j]));
    out[i] = best;
  }
  return out;
}

bool satisfies_upper(const Problem& problem, std::span<const double> x, double tol) {
  const auto lhs = max_composition(problem.lambda(), problem.a(), x);
  const auto rhs = problem.b_upper();
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (lhs[i] > rhs[i] + tol) return false;
  return true;
}

bool satisfies_lower(const Problem& problem, std::span<const double> x, double tol) {
  const auto lhs = max_composition(problem.lambda(), problem.d(), x);
  const auto rhs = problem.b_lower();
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (lhs[i] < rhs[i] - tol) return false;
  return true;
}

bool is_solution(const Problem& problem, std::span<const double> x, double tol) {
  require_length(x, problem.num_vars());
  const bool in_box = std::all_of(x.begin(), x.end(), [](double v) { return v >= 0.0 && v <= 1.0; });
  return in_box && satisfies_upper(problem, x, tol) && satisfies_lower(problem, x, tol);
}

IndexSets compute_j2_sets(const Problem& problem) {
  const auto& d = problem.d();
  const auto b = problem.b_lower();
  IndexSets sets(d.rows());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (d(i, j) >= b[i]) sets[i].push_back(j);
  return sets;
}

std::vector<double> compute_max_solution(const Problem& problem) {
  const auto& a = problem.a();
  const auto b = problem.b_upper();
  std::vector<double> x_max(problem.num_vars(), 1.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      x_max[j] = std::min(x_max[j], residual_leq(problem.lambda(), a(i, j), b[i]));
  return x_max;
}

FeasibilityReport check_feasibility(const Problem& problem, double tol) {
  FeasibilityReport report;
  report.j2_sets = compute_j2_sets(problem);
  report.x_max = compute_max_solution(problem);
  report.lower_system_consistent = std::none_of(
      report.j2_sets.begin(), report.j2_sets.end(), [](const auto& s) { return s.empty(); });
  report.joint_feasible =
      report.lower_system_consistent && satisfies_lower(problem, report.x_max, tol);
  return report;
}

}  // namespace swfri

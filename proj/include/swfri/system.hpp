#pragma once

// Composition, the maximum solution of the <=-system, and the two
// feasibility tests that gate the solver.

#include <cstddef>
#include <span>
#include <vector>

#include "swfri/problem.hpp"

namespace swfri {

// Default membership tolerance; all quantities are O(1).
inline constexpr double kDefaultTolerance = 1e-9;

// (M phi x)_i = max_j T(m_ij, x_j).
std::vector<double> max_composition(Lambda lambda, const Matrix& m, std::span<const double> x);

bool satisfies_upper(const Problem& problem, std::span<const double> x,
                     double tol = kDefaultTolerance);
bool satisfies_lower(const Problem& problem, std::span<const double> x,
                     double tol = kDefaultTolerance);

// Membership in the joint feasible region (both systems and the unit box).
bool is_solution(const Problem& problem, std::span<const double> x,
                 double tol = kDefaultTolerance);

using IndexSets = std::vector<std::vector<std::size_t>>;

// For each >=-row i, the ascending columns j with d_ij >= b2_i.
IndexSets compute_j2_sets(const Problem& problem);

// Componentwise-largest x with A phi x <= b1; all ones when there is no A.
std::vector<double> compute_max_solution(const Problem& problem);

struct FeasibilityReport {
  IndexSets j2_sets;
  std::vector<double> x_max;
  bool lower_system_consistent = false;  // every J2 set nonempty
  bool joint_feasible = false;           // x_max satisfies the >=-system
};

FeasibilityReport check_feasibility(const Problem& problem, double tol = kDefaultTolerance);

}  // namespace swfri

#include "swfri/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "swfri/antichain.hpp"
#include "swfri/kernels.hpp"

namespace swfri {

namespace {

using Clock = std::chrono::steady_clock;

double since_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

Enumeration enumerate_minimal_solutions(const CandidateMatrix& candidates,
                                        const SearchOptions& options) {
  if (!candidates.joint_feasible())
    throw InfeasibleCall("enumerate_minimal_solutions called on an infeasible instance");

  const auto start = Clock::now();
  const bool parallel = options.threads != 1;
  auto raw = parallel ? kernels::covering_search_parallel(candidates, options)
                      : kernels::covering_search_serial(candidates, options);

  Enumeration out;
  out.complete = !raw.aborted;
  out.stats.nodes_expanded = raw.nodes_expanded;
  out.stats.solutions_recorded = raw.recorded.size();
  out.stats.assignment_count = candidates.assignment_count();

  const auto keep = minimal_indices(raw.recorded, candidates.tolerance(),
                                    parallel ? Execution::parallel : Execution::serial);
  out.solutions.reserve(keep.size());
  for (std::size_t k : keep) {
    MinimalSolution sol;
    sol.x = std::move(raw.recorded[k]);
    sol.objective = sol.x.empty() ? 0.0 : *std::max_element(sol.x.begin(), sol.x.end());
    if (options.record_witness) sol.witness = std::move(raw.witnesses[k]);
    out.solutions.push_back(std::move(sol));
  }
  out.stats.elapsed_ms = since_ms(start);
  return out;
}

std::string_view to_string(InfeasibilityReason reason) noexcept {
  switch (reason) {
    case InfeasibilityReason::lower_system_inconsistent:
      return "lower-system-inconsistent";
    case InfeasibilityReason::max_solution_violates_lower_system:
      return "max-solution-violates-lower-system";
  }
  return "unknown";
}

SolveResult solve(const Problem& problem, const SolveOptions& options) {
  const auto start = Clock::now();
  SolveResult result;
  result.report = check_feasibility(problem, options.tolerance);

  auto infeasible = [&](InfeasibilityReason reason) {
    result.feasible = false;
    result.reason = reason;
    if (options.all_minimal) result.minimal_solutions.emplace();
    result.stats.elapsed_ms = since_ms(start);
    return result;
  };

  if (!result.report.lower_system_consistent)
    return infeasible(InfeasibilityReason::lower_system_inconsistent);
  if (!result.report.joint_feasible)
    return infeasible(InfeasibilityReason::max_solution_violates_lower_system);

  const auto candidates = build_candidates(problem, result.report, options.tolerance);
  result.stats.assignment_count = candidates.assignment_count();
  const auto z_star = optimal_value(candidates);
  // x_max passed the >=-test only within tolerance while some row has no
  // masked column; treat it as the same failure.
  if (!z_star) return infeasible(InfeasibilityReason::max_solution_violates_lower_system);

  result.feasible = true;
  result.z_star = z_star;
  const double tie = options.tolerance;

  // Optimal minimal solutions only use values <= z*, so the optimal-only
  // run searches the mask cut at z*.
  const auto enumeration = options.all_minimal
                               ? enumerate_minimal_solutions(candidates, options.search)
                               : enumerate_minimal_solutions(
                                     candidates.restricted_to(*z_star + tie), options.search);

  result.complete = enumeration.complete;
  result.stats.nodes_expanded = enumeration.stats.nodes_expanded;
  result.stats.solutions_recorded = enumeration.stats.solutions_recorded;

  for (const auto& sol : enumeration.solutions)
    if (std::abs(sol.objective - *z_star) <= tie) result.optimal_solutions.push_back(sol);
  if (options.all_minimal) result.minimal_solutions = enumeration.solutions;

  if (result.complete) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& sol : enumeration.solutions) best = std::min(best, sol.objective);
    if (!(std::abs(best - *z_star) <= tie))
      throw std::logic_error("closed-form optimum disagrees with the enumerated minimum");
  }

  result.stats.elapsed_ms = since_ms(start);
  return result;
}

}  // namespace swfri

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "swfri/candidates.hpp"
#include "swfri/system.hpp"

namespace swfri {

struct SearchLimits {
  std::optional<std::uint64_t> max_solutions;  // cap on recorded (pre-filter) vectors
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::chrono::milliseconds> time_budget;
};

struct SearchOptions {
  SearchLimits limits;
  // 1 runs the serial reference search; more partitions the first branching
  // level across OpenMP threads. The solution set does not depend on it.
  int threads = 1;
  bool record_witness = false;
  // Shuffles column visiting order and row tie-breaking. Changes only the
  // search effort, never the result.
  std::optional<std::uint64_t> shuffle_seed;
};

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t solutions_recorded = 0;
  BigCount assignment_count;
  double elapsed_ms = 0.0;
};

struct Enumeration {
  std::vector<MinimalSolution> solutions;  // lexicographic order
  bool complete = true;                    // false when a limit stopped the search
  SearchStats stats;
};

// All minimal elements of {x(e) : e in E, x(e) <= x_max}, found by a
// covering depth-first search with dominance pruning and an antichain
// post-filter. Throws InfeasibleCall when the region is empty.
Enumeration enumerate_minimal_solutions(const CandidateMatrix& candidates,
                                        const SearchOptions& options = {});

enum class InfeasibilityReason {
  lower_system_inconsistent,
  max_solution_violates_lower_system,
};

std::string_view to_string(InfeasibilityReason reason) noexcept;

struct SolveOptions {
  // Enumerate the full minimal-solution set, not just the optimal ones.
  bool all_minimal = false;
  double tolerance = kDefaultTolerance;
  SearchOptions search;
};

struct SolveResult {
  bool feasible = false;
  std::optional<InfeasibilityReason> reason;
  FeasibilityReport report;
  std::optional<double> z_star;
  std::vector<MinimalSolution> optimal_solutions;
  std::optional<std::vector<MinimalSolution>> minimal_solutions;
  bool complete = true;
  SearchStats stats;
};

SolveResult solve(const Problem& problem, const SolveOptions& options = {});

}  // namespace swfri

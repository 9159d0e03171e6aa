#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "swfri/candidates.hpp"
#include "swfri/solver.hpp"

namespace swfri::detail {

inline constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

// Immutable, shared by every worker.
struct SearchPlan {
  SearchPlan(const CandidateMatrix& candidates, const SearchOptions& options);

  const CandidateMatrix& candidates;
  std::vector<std::size_t> branch_rows;              // non-vacuous rows
  std::vector<std::vector<std::size_t>> columns;     // per branch row, visiting order
  std::vector<std::size_t> tie_rank;                 // per branch row
  double tol;
  bool record_witness;

  // Fail-first: the unsatisfied branch row with the fewest masked columns.
  // Returns branch_rows.size() when p covers every row.
  std::size_t pick_row(const std::vector<double>& p) const;
  bool satisfied(std::size_t r, const std::vector<double>& p) const;
  std::vector<std::size_t> witness(const std::vector<double>& p,
                                   const std::vector<std::size_t>& branched) const;
};

// Limits shared across workers.
class Budget {
 public:
  explicit Budget(const SearchLimits& limits);

  // Counts one node; false once any limit has tripped.
  bool charge_node();
  // Reserves room for one more recorded vector.
  bool charge_solution();
  bool stopped() const noexcept { return stop_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const noexcept { return nodes_.load(); }

 private:
  SearchLimits limits_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::uint64_t> solutions_{0};
  std::atomic<bool> stop_{false};
};

// One depth-first covering search with its own recorded set.
class CoveringSearch {
 public:
  CoveringSearch(const SearchPlan& plan, Budget& budget) : plan_(plan), budget_(budget) {}

  // Searches below the partial vector p; `branched` holds the column chosen
  // for each branch row so far (kUnassigned otherwise).
  void run(std::vector<double> p, std::vector<std::size_t> branched);

  std::vector<std::vector<double>> recorded;
  std::vector<std::vector<std::size_t>> witnesses;

 private:
  void descend(std::vector<double>& p, std::vector<std::size_t>& branched);
  bool dominates_recorded(const std::vector<double>& p) const;

  const SearchPlan& plan_;
  Budget& budget_;
};

}  // namespace swfri::detail

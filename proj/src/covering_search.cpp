#include "covering_search.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "swfri/antichain.hpp"

namespace swfri::detail {

SearchPlan::SearchPlan(const CandidateMatrix& c, const SearchOptions& options)
    : candidates(c), tol(c.tolerance()), record_witness(options.record_witness) {
  for (std::size_t i = 0; i < c.rows(); ++i) {
    if (c.vacuous(i)) continue;
    branch_rows.push_back(i);
    auto cols = c.feasible_columns(i);
    // Small values first: early covers are low and prune more.
    std::stable_sort(cols.begin(), cols.end(),
                     [&](std::size_t l, std::size_t r) { return c.value(i, l) < c.value(i, r); });
    columns.push_back(std::move(cols));
  }
  tie_rank.resize(branch_rows.size());
  std::iota(tie_rank.begin(), tie_rank.end(), std::size_t{0});

  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    std::shuffle(tie_rank.begin(), tie_rank.end(), rng);
    for (auto& cols : columns) std::shuffle(cols.begin(), cols.end(), rng);
  }
}

bool SearchPlan::satisfied(std::size_t r, const std::vector<double>& p) const {
  const std::size_t i = branch_rows[r];
  return std::any_of(columns[r].begin(), columns[r].end(),
                     [&](std::size_t j) { return p[j] >= candidates.value(i, j); });
}

std::size_t SearchPlan::pick_row(const std::vector<double>& p) const {
  std::size_t best = branch_rows.size();
  for (std::size_t r = 0; r < branch_rows.size(); ++r) {
    if (satisfied(r, p)) continue;
    if (best == branch_rows.size() || columns[r].size() < columns[best].size() ||
        (columns[r].size() == columns[best].size() && tie_rank[r] < tie_rank[best]))
      best = r;
  }
  return best;
}

std::vector<std::size_t> SearchPlan::witness(const std::vector<double>& p,
                                             const std::vector<std::size_t>& branched) const {
  const auto& c = candidates;
  std::vector<std::size_t> e(c.rows(), 0);
  for (std::size_t r = 0; r < branch_rows.size(); ++r) {
    const std::size_t i = branch_rows[r];
    if (branched[r] != kUnassigned) {
      e[i] = branched[r];
      continue;
    }
    for (std::size_t j = 0; j < c.cols(); ++j) {
      if (c.feasible(i, j) && p[j] >= c.value(i, j)) {
        e[i] = j;
        break;
      }
    }
  }
  // Vacuous rows keep column 0: every column is in J2 with value 0.
  return e;
}

Budget::Budget(const SearchLimits& limits) : limits_(limits) {
  if (limits.time_budget) deadline_ = std::chrono::steady_clock::now() + *limits.time_budget;
}

bool Budget::charge_node() {
  if (stopped()) return false;
  const std::uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
  if (limits_.max_nodes && n > *limits_.max_nodes) {
    stop_.store(true);
    return false;
  }
  if (deadline_ && (n & 0xff) == 0 && std::chrono::steady_clock::now() > *deadline_) {
    stop_.store(true);
    return false;
  }
  return true;
}

bool Budget::charge_solution() {
  const std::uint64_t n = solutions_.fetch_add(1, std::memory_order_relaxed) + 1;
  if (limits_.max_solutions && n > *limits_.max_solutions) {
    stop_.store(true);
    return false;
  }
  return true;
}

void CoveringSearch::run(std::vector<double> p, std::vector<std::size_t> branched) {
  descend(p, branched);
}

bool CoveringSearch::dominates_recorded(const std::vector<double>& p) const {
  return std::any_of(recorded.begin(), recorded.end(),
                     [&](const auto& s) { return weakly_below(s, p, plan_.tol); });
}

void CoveringSearch::descend(std::vector<double>& p, std::vector<std::size_t>& branched) {
  if (!budget_.charge_node()) return;
  // Every completion of p lies above p, hence above the recorded vector.
  if (dominates_recorded(p)) return;

  const std::size_t r = plan_.pick_row(p);
  if (r == plan_.branch_rows.size()) {
    if (!budget_.charge_solution()) return;
    recorded.push_back(p);
    if (plan_.record_witness) witnesses.push_back(plan_.witness(p, branched));
    return;
  }

  const std::size_t i = plan_.branch_rows[r];
  for (std::size_t j : plan_.columns[r]) {
    const double saved = p[j];
    // Row r is unsatisfied, so v(i,j) > p[j].
    p[j] = plan_.candidates.value(i, j);
    branched[r] = j;
    descend(p, branched);
    branched[r] = kUnassigned;
    p[j] = saved;
    if (budget_.stopped()) return;
  }
}

}  // namespace swfri::detail

#include <omp.h>

#include <utility>

#include "covering_search.hpp"
#include "swfri/kernels.hpp"

namespace swfri::kernels {

// Splits the first branching level into independent subtrees. Each subtree
// prunes only against its own recorded set, so the recorded vectors and the
// node count do not depend on thread count or scheduling.
RawSearch covering_search_parallel(const CandidateMatrix& candidates,
                                   const SearchOptions& options) {
  const detail::SearchPlan plan(candidates, options);
  detail::Budget budget(options.limits);
  RawSearch out;

  const std::vector<double> zero(candidates.cols(), 0.0);
  const std::vector<std::size_t> unassigned(plan.branch_rows.size(), detail::kUnassigned);

  budget.charge_node();
  const std::size_t r = plan.pick_row(zero);
  if (r == plan.branch_rows.size()) {
    out.recorded.push_back(zero);
    if (plan.record_witness) out.witnesses.push_back(plan.witness(zero, unassigned));
    out.nodes_expanded = budget.nodes();
    return out;
  }

  const std::size_t i = plan.branch_rows[r];
  const auto& first = plan.columns[r];
  std::vector<detail::CoveringSearch> subtrees(first.size(), detail::CoveringSearch(plan, budget));

  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
  const auto count = static_cast<std::ptrdiff_t>(first.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    const std::size_t j = first[static_cast<std::size_t>(k)];
    std::vector<double> p = zero;
    p[j] = candidates.value(i, j);
    std::vector<std::size_t> branched = unassigned;
    branched[r] = j;
    subtrees[static_cast<std::size_t>(k)].run(std::move(p), std::move(branched));
  }

  for (auto& s : subtrees) {
    for (auto& v : s.recorded) out.recorded.push_back(std::move(v));
    for (auto& w : s.witnesses) out.witnesses.push_back(std::move(w));
  }
  out.nodes_expanded = budget.nodes();
  out.aborted = budget.stopped();
  return out;
}

}  // namespace swfri::kernels

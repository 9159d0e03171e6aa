#include <utility>

#include "covering_search.hpp"
#include "swfri/kernels.hpp"

namespace swfri::kernels {

RawSearch covering_search_serial(const CandidateMatrix& candidates,
                                 const SearchOptions& options) {
  const detail::SearchPlan plan(candidates, options);
  detail::Budget budget(options.limits);
  detail::CoveringSearch search(plan, budget);
  search.run(std::vector<double>(candidates.cols(), 0.0),
             std::vector<std::size_t>(plan.branch_rows.size(), detail::kUnassigned));

  RawSearch out;
  out.recorded = std::move(search.recorded);
  out.witnesses = std::move(search.witnesses);
  out.nodes_expanded = budget.nodes();
  out.aborted = budget.stopped();
  return out;
}

}  // namespace swfri::kernels

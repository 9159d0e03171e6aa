#pragma once

// The covering-search kernels behind enumerate_minimal_solutions. The serial
// kernel is the reference; the OpenMP kernel must return the same set.
// Exposed for tests and the benchmark.

#include <cstdint>
#include <vector>

#include "swfri/candidates.hpp"
#include "swfri/solver.hpp"

namespace swfri::kernels {

struct RawSearch {
  std::vector<std::vector<double>> recorded;             // covers, possibly non-minimal
  std::vector<std::vector<std::size_t>> witnesses;       // parallel to recorded when requested
  std::uint64_t nodes_expanded = 0;
  bool aborted = false;
};

RawSearch covering_search_serial(const CandidateMatrix& candidates, const SearchOptions& options);
RawSearch covering_search_parallel(const CandidateMatrix& candidates,
                                   const SearchOptions& options);

}  // namespace swfri::kernels

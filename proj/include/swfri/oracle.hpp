#pragma once

// Brute-force reference and random instances for cross-checking the solver
// on small problems. Shares only the t-norm and system primitives with the
// solver; assembly, masking and the antichain filter are coded separately.

#include <cstdint>
#include <vector>

#include "swfri/candidates.hpp"
#include "swfri/problem.hpp"

namespace swfri::oracle {

inline constexpr std::uint64_t kDefaultCap = 100'000;

// Materializes x(e) for every e in E, keeps those under the maximum
// solution, deduplicates and returns the minimal ones in lexicographic order.
// Throws CapExceeded when |E| > cap.
std::vector<MinimalSolution> brute_force_minimal(const Problem& problem,
                                                 std::uint64_t cap = kDefaultCap,
                                                 double tol = 1e-9);

struct GeneratorConfig {
  std::size_t n = 4;
  std::size_t m_upper = 2;
  std::size_t m_lower = 3;
  double lambda_min = -0.9;
  double lambda_max = 50.0;
  // Per-row probability that some d_ij >= b2_i is planted; rows that miss
  // get b2_i pushed above the row maximum.
  double density = 0.9;
  std::uint64_t seed = 0;
};

// Deterministic in the seed. Throws std::invalid_argument on a bad config.
Problem random_instance(const GeneratorConfig& config);

}  // namespace swfri::oracle

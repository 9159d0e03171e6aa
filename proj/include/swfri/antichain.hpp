#pragma once

// Componentwise-order utilities shared by the search and its post-filter.

#include <cstddef>
#include <span>
#include <vector>

namespace swfri {

enum class Execution { serial, parallel };

// a <= b + tol in every component.
bool weakly_below(std::span<const double> a, std::span<const double> b, double tol) noexcept;

// max_j |a_j - b_j| <= tol.
bool near_equal(std::span<const double> a, std::span<const double> b, double tol) noexcept;

bool lexicographic_less(std::span<const double> a, std::span<const double> b) noexcept;

// Indices of the minimal elements of `points` under componentwise <=, in
// lexicographic order of the points. Near-duplicates (max-norm <= tol)
// collapse onto the lexicographically first one.
std::vector<std::size_t> minimal_indices(const std::vector<std::vector<double>>& points,
                                         double tol, Execution execution = Execution::serial);

}  // namespace swfri

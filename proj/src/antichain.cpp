#include "swfri/antichain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace swfri {

bool weakly_below(std::span<const double> a, std::span<const double> b, double tol) noexcept {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j] + tol) return false;
  return true;
}

bool near_equal(std::span<const double> a, std::span<const double> b, double tol) noexcept {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (std::abs(a[j] - b[j]) > tol) return false;
  return true;
}

bool lexicographic_less(std::span<const double> a, std::span<const double> b) noexcept {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<std::size_t> minimal_indices(const std::vector<std::vector<double>>& points,
                                         double tol, Execution execution) {
  const std::size_t count = points.size();
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return lexicographic_less(points[l], points[r]);
  });
  std::vector<std::size_t> rank(count);
  for (std::size_t k = 0; k < count; ++k) rank[order[k]] = k;

  // s is dropped when some other t sits below it: strictly (not a
  // near-duplicate), or as a near-duplicate that comes first.
  auto dominated = [&](std::size_t s) {
    for (std::size_t t = 0; t < count; ++t) {
      if (t == s || !weakly_below(points[t], points[s], tol)) continue;
      if (!near_equal(points[t], points[s], tol) || rank[t] < rank[s]) return true;
    }
    return false;
  };

  std::vector<unsigned char> keep(count, 0);
  if (execution == Execution::parallel) {
    const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t s = 0; s < n; ++s) keep[s] = !dominated(static_cast<std::size_t>(s));
  } else {
    for (std::size_t s = 0; s < count; ++s) keep[s] = !dominated(s);
  }

  std::vector<std::size_t> out;
  for (std::size_t idx : order)
    if (keep[idx]) out.push_back(idx);
  return out;
}

}  // namespace swfri

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "swfri/candidates.hpp"
#include "swfri/io.hpp"
#include "swfri/problem.hpp"

namespace swfri::test {

inline std::string fixture_path(const std::string& name = "reference_10x10.json") {
  return std::string(SWFRI_FIXTURE_DIR) + "/" + name;
}

inline Problem load_fixture() { return Problem::create(io::read_problem_file(fixture_path())); }

// The t-norm exactly as listed, kept apart from the library's rewritten form.
inline double listed_tnorm(double lambda, double x, double y) {
  return std::max((x + y - 1.0 + lambda * x * y) / (1.0 + lambda), 0.0);
}

// Largest x in [0,1] with T(a, x) <= b, by bisection on the closed form.
inline double bisect_leq(double lambda, double a, double b) {
  if (listed_tnorm(lambda, a, 1.0) <= b) return 1.0;
  double lo = 0.0, hi = 1.0;
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    (listed_tnorm(lambda, a, mid) <= b ? lo : hi) = mid;
  }
  return lo;
}

// Smallest x in [0,1] with T(d, x) >= b (requires d >= b), by bisection.
inline double bisect_geq(double lambda, double d, double b) {
  if (b <= 0.0) return 0.0;
  double lo = 0.0, hi = 1.0;
  for (int k = 0; k < 200; ++k) {
    const double mid = 0.5 * (lo + hi);
    (listed_tnorm(lambda, d, mid) >= b ? hi : lo) = mid;
  }
  return hi;
}

inline bool close(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (std::abs(a[j] - b[j]) > tol) return false;
  return true;
}

// Set equality up to tol per component; both sides must be free of
// near-duplicates for this to be a bijection check.
inline bool same_set(const std::vector<std::vector<double>>& a,
                     const std::vector<std::vector<double>>& b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool found = false;
    for (std::size_t k = 0; k < b.size() && !found; ++k) {
      if (!used[k] && close(x, b[k], tol)) {
        used[k] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

inline std::vector<std::vector<double>> vectors_of(const std::vector<MinimalSolution>& sols) {
  std::vector<std::vector<double>> out;
  for (const auto& s : sols) out.push_back(s.x);
  return out;
}

}  // namespace swfri::test

#include "swfri/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "swfri/system.hpp"

namespace swfri::oracle {

namespace {

struct Point {
  std::vector<double> x;
  std::vector<std::size_t> e;
  double sum = 0.0;
};

bool below(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j] + tol) return false;
  return true;
}

bool same(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] - b[j] > tol || b[j] - a[j] > tol) return false;
  return true;
}

}  // namespace

std::vector<MinimalSolution> brute_force_minimal(const Problem& problem, std::uint64_t cap,
                                                 double tol) {
  const auto sets = compute_j2_sets(problem);
  const auto x_max = compute_max_solution(problem);
  const std::size_t m = problem.num_lower();
  const std::size_t n = problem.num_vars();

  std::uint64_t total = 1;
  for (const auto& s : sets) {
    if (s.empty()) return {};
    if (total > cap / s.size()) throw CapExceeded("|E| exceeds cap " + std::to_string(cap));
    total *= s.size();
  }

  // Per-row single-row minimal values, straight from the residual.
  std::vector<std::vector<double>> row_values(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j : sets[i])
      row_values[i].push_back(residual_geq(problem.lambda(), problem.d()(i, j), problem.b_lower()[i]));

  // Odometer over E; exact duplicates collapse in the set.
  std::set<std::vector<double>> seen;
  std::vector<Point> cells;
  std::vector<std::size_t> digit(m, 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    std::vector<double> x(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = sets[i][digit[i]];
      x[j] = std::max(x[j], row_values[i][digit[i]]);
    }
    // Empty cell [x(e), x_max] otherwise.
    if (below(x, x_max, tol) && seen.insert(x).second) {
      Point pt;
      pt.sum = std::accumulate(x.begin(), x.end(), 0.0);
      pt.x = std::move(x);
      pt.e.resize(m);
      for (std::size_t i = 0; i < m; ++i) pt.e[i] = sets[i][digit[i]];
      cells.push_back(std::move(pt));
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (++digit[i] < sets[i].size()) break;
      digit[i] = 0;
    }
  }

  // Sort-filter skyline: a dominator has a smaller coordinate sum (up to
  // tolerance), then a final pairwise pass over the survivors.
  std::sort(cells.begin(), cells.end(), [](const Point& l, const Point& r) {
    return l.sum != r.sum ? l.sum < r.sum : l.x < r.x;
  });
  std::vector<Point> front;
  for (auto& pt : cells) {
    const bool covered = std::any_of(front.begin(), front.end(),
                                     [&](const Point& f) { return below(f.x, pt.x, tol); });
    if (!covered) front.push_back(std::move(pt));
  }
  std::vector<MinimalSolution> out;
  for (std::size_t s = 0; s < front.size(); ++s) {
    bool dominated = false;
    for (std::size_t t = 0; t < front.size() && !dominated; ++t)
      dominated = t != s && below(front[t].x, front[s].x, tol) && !same(front[t].x, front[s].x, tol);
    if (dominated) continue;
    MinimalSolution sol;
    sol.x = front[s].x;
    sol.objective = *std::max_element(sol.x.begin(), sol.x.end());
    sol.witness = front[s].e;
    out.push_back(std::move(sol));
  }
  std::sort(out.begin(), out.end(),
            [](const MinimalSolution& l, const MinimalSolution& r) { return l.x < r.x; });
  return out;
}

Problem random_instance(const GeneratorConfig& config) {
  if (config.n == 0 || config.m_lower == 0)
    throw std::invalid_argument("generator needs n >= 1 and m_lower >= 1");
  if (!(config.lambda_min > -1.0) || !(config.lambda_max >= config.lambda_min))
    throw std::invalid_argument("lambda range must lie in (-1, inf)");
  if (!(config.density >= 0.0 && config.density <= 1.0))
    throw std::invalid_argument("density must be in [0,1]");

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> lambda_dist(config.lambda_min, config.lambda_max);
  std::uniform_int_distribution<std::size_t> column(0, config.n - 1);
  std::bernoulli_distribution planted(config.density);
  std::bernoulli_distribution zero_row(0.05);

  RawProblem raw;
  raw.lambda = config.lambda_min == config.lambda_max ? config.lambda_min : lambda_dist(rng);
  if (*raw.lambda <= -1.0) raw.lambda = config.lambda_min;

  raw.a.assign(config.m_upper, std::vector<double>(config.n));
  raw.b_upper.resize(config.m_upper);
  for (std::size_t i = 0; i < config.m_upper; ++i) {
    for (auto& v : raw.a[i]) v = unit(rng);
    // Upper thresholds skew high so the box [0, x_max] is not always tiny.
    raw.b_upper[i] = 0.3 + 0.7 * unit(rng);
  }

  raw.d.assign(config.m_lower, std::vector<double>(config.n));
  raw.b_lower.resize(config.m_lower);
  for (std::size_t i = 0; i < config.m_lower; ++i) {
    auto& row = raw.d[i];
    for (auto& v : row) v = unit(rng);
    double b = 0.5 * unit(rng);
    const bool vacuous = zero_row(rng);
    if (planted(rng)) {
      if (vacuous) b = 0.0;
      const std::size_t j = column(rng);
      row[j] = std::max(row[j], b + (1.0 - b) * unit(rng));
    } else {
      // Every entry strictly below b.
      double top = *std::max_element(row.begin(), row.end());
      if (top >= 1.0) {
        for (auto& v : row) v *= 0.5;
        top *= 0.5;
      }
      b = std::nextafter(top, 1.0) + (1.0 - std::nextafter(top, 1.0)) * unit(rng);
      if (b <= top) b = std::nextafter(top, 1.0);
    }
    raw.b_lower[i] = b;
  }
  return Problem::create(raw);
}

}  // namespace swfri::oracle

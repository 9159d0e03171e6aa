#include "swfri/system.hpp"

#include <random>

#include "doctest.h"
#include "swfri/oracle.hpp"
#include "test_support.hpp"

using namespace swfri;

namespace {

Problem tiny(double lambda, std::vector<std::vector<double>> a, std::vector<double> b1,
             std::vector<std::vector<double>> d, std::vector<double> b2) {
  RawProblem raw;
  raw.lambda = lambda;
  raw.a = std::move(a);
  raw.b_upper = std::move(b1);
  raw.d = std::move(d);
  raw.b_lower = std::move(b2);
  return Problem::create(raw);
}

// Maximum solution computed column by column with bisection on the listed
// t-norm. Shares nothing with compute_max_solution.
std::vector<double> bisected_max_solution(const Problem& p) {
  std::vector<double> x(p.num_vars(), 1.0);
  for (std::size_t j = 0; j < p.num_vars(); ++j)
    for (std::size_t i = 0; i < p.num_upper(); ++i)
      x[j] = std::min(x[j], test::bisect_leq(p.lambda().value(), p.a()(i, j), p.b_upper()[i]));
  return x;
}

std::vector<std::size_t> all_but(std::initializer_list<std::size_t> removed_1based) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < 10; ++j)
    if (std::find(removed_1based.begin(), removed_1based.end(), j + 1) == removed_1based.end())
      out.push_back(j);
  return out;
}

}  // namespace

TEST_CASE("max_composition") {
  const auto p = test::load_fixture();
  const std::vector<double> ones(10, 1.0), zeros(10, 0.0);

  const auto at_ones = max_composition(p.lambda(), p.d(), ones);
  for (std::size_t i = 0; i < 10; ++i) {
    const auto row = p.d().row(i);
    CHECK(at_ones[i] == *std::max_element(row.begin(), row.end()));
    CHECK(at_ones[i] >= p.b_lower()[i]);
  }
  for (double v : max_composition(p.lambda(), p.d(), zeros)) CHECK(v == 0.0);

  Matrix m(1, 2);
  m(0, 0) = 0.9;
  m(0, 1) = 0.5;
  const std::vector<double> x{0.3684, 0.0};
  const double expected = test::listed_tnorm(1.0, 0.9, 0.3684);
  CHECK(std::abs(expected - 0.3) <= 1e-3);
  CHECK(std::abs(max_composition(Lambda(1), m, x)[0] - expected) <= 1e-15);

  const std::vector<double> short_x{0.1};
  CHECK_THROWS_AS(max_composition(Lambda(1), m, short_x), DimensionMismatch);
}

TEST_CASE("is_solution on the fixture") {
  const auto p = test::load_fixture();
  // Listed minimal solution x(e6), rounded to 4 decimals, so checked at 1e-4.
  const std::vector<double> x6{0.0924, 0.1770, 0.0592, 0.1918, 0.1991, 0, 0, 0, 0, 0};
  CHECK(is_solution(p, x6, 1e-4));
  CHECK_FALSE(is_solution(p, std::vector<double>(10, 0.0), 1e-6));
  CHECK(is_solution(p, compute_max_solution(p), 1e-6));
  CHECK_THROWS_AS(is_solution(p, std::vector<double>(3, 0.0)), DimensionMismatch);
  auto outside = compute_max_solution(p);
  outside[0] = -0.1;
  CHECK_FALSE(is_solution(p, outside));
}

TEST_CASE("J2 sets of the fixture") {
  const auto sets = compute_j2_sets(test::load_fixture());
  REQUIRE(sets.size() == 10);
  const auto full = all_but({});
  CHECK(sets[0] == full);
  CHECK(sets[2] == full);
  CHECK(sets[7] == full);
  CHECK(sets[8] == full);
  CHECK(sets[1] == all_but({8}));
  CHECK(sets[4] == all_but({8}));
  CHECK(sets[5] == all_but({9}));
  CHECK(sets[6] == all_but({3, 10}));
  CHECK(sets[9] == all_but({2, 4}));
  // Not listed; read off row 4 of D against b2_4 = 0.0810.
  CHECK(sets[3] == all_but({1, 5}));
}

TEST_CASE("J2 sets with a zero threshold are full") {
  const auto p = tiny(1.0, {}, {}, {{0.0, 0.2, 0.0}}, {0.0});
  CHECK(compute_j2_sets(p)[0] == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("maximum solution") {
  const auto small = tiny(1.0, {{0.8, 0.3}}, {0.5}, {{1.0, 1.0}}, {0.1});
  const auto x = compute_max_solution(small);
  CHECK(std::abs(x[0] - (2 * 0.5 + 1 - 0.8) / 1.8) <= 1e-12);
  CHECK(std::abs(x[0] - 0.6667) <= 1e-4);
  CHECK(x[1] == 1.0);

  const auto loose = tiny(3.0, {{0.1, 0.2}, {0.3, 0.05}}, {0.5, 0.3}, {{1.0, 1.0}}, {0.1});
  CHECK(compute_max_solution(loose) == std::vector<double>{1.0, 1.0});

  const auto no_upper = tiny(3.0, {}, {}, {{1.0, 1.0}}, {0.1});
  CHECK(compute_max_solution(no_upper) == std::vector<double>{1.0, 1.0});
}

TEST_CASE("maximum solution of the fixture") {
  const auto p = test::load_fixture();
  const auto x = compute_max_solution(p);
  // Frozen from bisected_max_solution (and an offline recomputation).
  const std::vector<double> frozen{0.0954712362301, 0.2505841627,  0.0980554406289,
                                   0.217132462378,  0.24230736628, 0.203573225969,
                                   0.184670817883,  0.158025247971, 0.182426778243,
                                   0.176581936182};
  CHECK(test::close(x, frozen, 1e-11));
  CHECK(test::close(x, bisected_max_solution(p), 1e-12));
  const auto lhs = max_composition(p.lambda(), p.a(), x);
  for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(lhs[i] <= p.b_upper()[i] + 1e-12);
}

TEST_CASE("check_feasibility") {
  const auto fixture = check_feasibility(test::load_fixture());
  CHECK(fixture.lower_system_consistent);
  CHECK(fixture.joint_feasible);

  const auto dead_row = tiny(2.0, {}, {}, {{0.0, 0.0}, {0.9, 0.1}}, {0.5, 0.2});
  const auto r1 = check_feasibility(dead_row);
  CHECK_FALSE(r1.lower_system_consistent);
  CHECK_FALSE(r1.joint_feasible);

  const auto conflict = tiny(1.0, {{0.95}}, {0.0}, {{0.9}}, {0.3});
  const auto r2 = check_feasibility(conflict);
  CHECK(r2.lower_system_consistent);
  CHECK_FALSE(r2.joint_feasible);
  CHECK(std::abs(r2.x_max[0] - 0.05 / 1.95) <= 1e-12);
  CHECK(test::bisect_geq(1.0, 0.9, 0.3) > r2.x_max[0]);
}

TEST_CASE("feasibility properties on random instances") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    oracle::GeneratorConfig cfg;
    cfg.n = 2 + seed % 5;
    cfg.m_upper = seed % 4;
    cfg.m_lower = 1 + seed % 5;
    cfg.density = 0.8;
    cfg.seed = seed;
    const auto p = oracle::random_instance(cfg);
    const auto report = check_feasibility(p);

    // J2 nonempty everywhere <=> all ones satisfies D.
    CHECK(report.lower_system_consistent == satisfies_lower(p, std::vector<double>(p.num_vars(), 1.0), 0.0));
    if (report.joint_feasible) CHECK(report.lower_system_consistent);

    // Upward closure of the >=-system.
    if (report.joint_feasible) {
      auto x = report.x_max;
      for (auto& v : x) v = v + (1.0 - v) * unit(rng);
      CHECK(satisfies_lower(p, x));
    }

    // Maximality of x_max.
    for (std::size_t j = 0; j < p.num_vars(); ++j) {
      if (report.x_max[j] >= 1.0 - 1e-4) continue;
      auto x = report.x_max;
      x[j] += 1e-4;
      CHECK_FALSE(satisfies_upper(p, x, 0.0));
    }

    // Antitone in A, isotone in b1.
    if (p.num_upper() > 0) {
      auto raw = p.to_raw();
      for (auto& row : raw.a)
        for (auto& v : row) v = std::min(1.0, v + 0.1 * unit(rng));
      for (auto& b : raw.b_upper) b = std::max(0.0, b - 0.1 * unit(rng));
      const auto tighter = compute_max_solution(Problem::create(raw));
      for (std::size_t j = 0; j < p.num_vars(); ++j) CHECK(tighter[j] <= report.x_max[j]);
    }
  }
}

// Serial reference vs OpenMP kernels: covering search and the antichain filter.

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "swfri/antichain.hpp"
#include "swfri/io.hpp"
#include "swfri/kernels.hpp"
#include "swfri/oracle.hpp"
#include "swfri/system.hpp"

using namespace swfri;

namespace {

CandidateMatrix candidates_for(const Problem& p) {
  return build_candidates(p, check_feasibility(p));
}

const CandidateMatrix& fixture() {
  static const CandidateMatrix c =
      candidates_for(Problem::create(io::read_problem_file(std::string(SWFRI_FIXTURE_DIR) + "/reference_10x10.json")));
  return c;
}

// Largest jointly feasible instance among a fixed set of seeds.
const CandidateMatrix& random_large() {
  static const CandidateMatrix c = [] {
    oracle::GeneratorConfig cfg;
    cfg.n = 14;
    cfg.m_upper = 2;
    cfg.m_lower = 12;
    cfg.density = 1.0;
    for (cfg.seed = 1;; ++cfg.seed) {
      auto p = oracle::random_instance(cfg);
      auto report = check_feasibility(p);
      if (report.joint_feasible) return build_candidates(p, report);
    }
  }();
  return c;
}

std::vector<std::vector<double>> random_points(std::size_t k, std::size_t n) {
  std::mt19937_64 rng(k);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> out(k, std::vector<double>(n));
  for (auto& row : out)
    for (auto& v : row) v = u(rng);
  return out;
}

template <class Kernel>
void run_search(benchmark::State& state, const CandidateMatrix& c, Kernel kernel) {
  SearchOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    auto r = kernel(c, opts);
    nodes = r.nodes_expanded;
    benchmark::DoNotOptimize(r.recorded.data());
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}

void BM_SearchSerial_Fixture(benchmark::State& s) { run_search(s, fixture(), kernels::covering_search_serial); }
void BM_SearchOmp_Fixture(benchmark::State& s) { run_search(s, fixture(), kernels::covering_search_parallel); }
void BM_SearchSerial_Random(benchmark::State& s) { run_search(s, random_large(), kernels::covering_search_serial); }
void BM_SearchOmp_Random(benchmark::State& s) { run_search(s, random_large(), kernels::covering_search_parallel); }

void run_filter(benchmark::State& state, Execution exec) {
  const auto pts = random_points(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_indices(pts, 1e-9, exec));
  state.SetComplexityN(state.range(0));
}

void BM_AntichainSerial(benchmark::State& s) { run_filter(s, Execution::serial); }
void BM_AntichainOmp(benchmark::State& s) { run_filter(s, Execution::parallel); }

}  // namespace

BENCHMARK(BM_SearchSerial_Fixture)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SearchOmp_Fixture)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SearchSerial_Random)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchOmp_Random)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AntichainSerial)->Range(256, 4096)->Complexity();
BENCHMARK(BM_AntichainOmp)->Range(256, 4096)->Complexity();

BENCHMARK_MAIN();

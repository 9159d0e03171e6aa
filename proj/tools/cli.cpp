#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "swfri/io.hpp"
#include "swfri/solver.hpp"

namespace swfri::cli {

namespace {

int default_threads() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver for min max(x) subject to max-Sugeno-Weber relational inequalities"};
  app.set_version_flag("--version", "fri-solve 1.0");

  std::string input;
  bool all_minimal = false;
  bool optimal_only = false;
  bool stats = false;
  bool witness = false;
  double tolerance = kDefaultTolerance;
  std::string format = "json";
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::uint64_t> time_budget_ms;
  int threads = default_threads();

  app.add_option("input", input, "Problem file (JSON)")->required();
  auto* all_flag = app.add_flag("--all-minimal", all_minimal, "Also report every minimal solution");
  app.add_flag("--optimal-only", optimal_only, "Report only optimal solutions (default)")
      ->excludes(all_flag);
  app.add_option("--tolerance", tolerance, "Comparison tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--max-nodes", max_nodes, "Stop the search after this many nodes");
  app.add_option("--time-budget-ms", time_budget_ms, "Stop the search after this many ms");
  app.add_option("--threads", threads,
                 std::string("Worker threads for the search; default from ") + kThreadsEnv +
                     " or 1")
      ->check(CLI::PositiveNumber);
  app.add_flag("--stats", stats, "Print search statistics (table format)");
  app.add_flag("--witness", witness, "Include one generating assignment per solution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInvalidInput;
  }

  RawProblem raw;
  try {
    raw = io::read_problem_file(input);
  } catch (const io::FileNotFound& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  auto validated = validate(raw);
  if (auto* issues = std::get_if<std::vector<ValidationIssue>>(&validated)) {
    for (const auto& issue : *issues) err << "error: " << issue.field << ": " << issue.message << '\n';
    return kInvalidInput;
  }
  const auto& problem = std::get<Problem>(validated);

  SolveOptions options;
  options.all_minimal = all_minimal;
  options.tolerance = tolerance;
  options.search.threads = threads;
  options.search.record_witness = witness;
  options.search.limits.max_nodes = max_nodes;
  if (time_budget_ms) options.search.limits.time_budget = std::chrono::milliseconds(*time_budget_ms);

  const auto result = solve(problem, options);
  const io::ResultFormat fmt{all_minimal, witness};
  if (format == "table")
    out << io::result_to_table(result, fmt, stats);
  else
    out << io::result_to_json(result, fmt).dump(2) << '\n';

  if (!result.feasible) {
    err << "infeasible: " << to_string(*result.reason) << '\n';
    return kInfeasible;
  }
  if (!result.complete) {
    err << "search budget exhausted; results are partial\n";
    return kBudgetExhausted;
  }
  return kFeasible;
}

}  // namespace swfri::cli

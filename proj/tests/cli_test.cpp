#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "swfri/io.hpp"
#include "swfri/system.hpp"
#include "test_support.hpp"

using namespace swfri;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "fri-solve");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::ofstream(name) << content;
  return name;
}

json without_elapsed(json doc) {
  doc["stats"].erase("elapsed_ms");
  return doc;
}

}  // namespace

TEST_CASE("fixture with --all-minimal") {
  const auto r = run({test::fixture_path(), "--all-minimal"});
  REQUIRE(r.code == cli::kFeasible);
  const auto doc = json::parse(r.out);
  CHECK(doc["feasible"] == true);
  CHECK(std::abs(doc["z_star"].get<double>() - 0.1918) <= 1e-3);
  CHECK(doc["optimal_solutions"].size() == 31);
  CHECK(doc["minimal_solutions"].size() == 38);

  // Every reported solution is feasible at the run's tolerance.
  const auto p = test::load_fixture();
  for (const auto& x : doc["minimal_solutions"])
    CHECK(is_solution(p, x.get<std::vector<double>>(), 1e-9));
}

TEST_CASE("default run is optimal-only and deterministic") {
  const auto a = run({test::fixture_path()});
  const auto b = run({test::fixture_path(), "--optimal-only"});
  const auto c = run({test::fixture_path(), "--threads", "3"});
  REQUIRE(a.code == 0);
  const auto da = json::parse(a.out);
  CHECK_FALSE(da.contains("minimal_solutions"));
  CHECK(without_elapsed(da) == without_elapsed(json::parse(b.out)));
  CHECK(without_elapsed(da)["optimal_solutions"] == json::parse(c.out)["optimal_solutions"]);
}

TEST_CASE("lambda = -1 is invalid input naming lambda") {
  const auto path = write_temp("cli_test_lambda.json",
                               R"({"lambda": -1, "D": [[0.5]], "b2": [0.1]})");
  const auto r = run({path});
  CHECK(r.code == cli::kInvalidInput);
  CHECK(r.err.find("lambda") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("inconsistent lower system exits 1 with its reason") {
  const auto path = write_temp("cli_test_infeasible.json",
                               R"({"lambda": 1, "D": [[0.1, 0.2]], "b2": [0.5]})");
  const auto r = run({path});
  CHECK(r.code == cli::kInfeasible);
  const auto doc = json::parse(r.out);
  CHECK(doc["feasible"] == false);
  CHECK(doc["reason"] == "lower-system-inconsistent");
  std::remove(path.c_str());
}

TEST_CASE("input errors exit 2") {
  CHECK(run({"/nonexistent.json"}).code == cli::kInvalidInput);
  const auto bad = write_temp("cli_test_bad.json", R"({"lambda": 1, "D": [[1.5]], "b2": [0.1]})");
  const auto r = run({bad});
  CHECK(r.code == cli::kInvalidInput);
  CHECK(r.err.find("D") != std::string::npos);
  std::remove(bad.c_str());
  CHECK(run({test::fixture_path(), "--format", "xml"}).code == cli::kInvalidInput);
  CHECK(run({}).code == cli::kInvalidInput);
}

TEST_CASE("budget exhaustion exits 3") {
  const auto r = run({test::fixture_path(), "--all-minimal", "--max-nodes", "5"});
  CHECK(r.code == cli::kBudgetExhausted);
  CHECK(json::parse(r.out)["complete"] == false);
}

TEST_CASE("table format puts the objective first") {
  const auto r = run({test::fixture_path(), "--format", "table", "--stats", "--witness"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("optimal solutions (31)") != std::string::npos);
  CHECK(r.out.find("0.191783332112 |") != std::string::npos);
  CHECK(r.out.find("nodes_expanded:") != std::string::npos);
  CHECK(r.out.find("| e =") != std::string::npos);
}

TEST_CASE("thread count from the environment") {
  setenv(cli::kThreadsEnv, "2", 1);
  const auto r = run({test::fixture_path()});
  unsetenv(cli::kThreadsEnv);
  CHECK(r.code == 0);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find(cli::kThreadsEnv) != std::string::npos);
}

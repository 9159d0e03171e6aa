#include "swfri/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace swfri::io {

namespace {

using nlohmann::json;

double number(const json& v, const std::string& field) {
  if (!v.is_number()) throw ParseError(field, "expected a number, got " + std::string(v.type_name()));
  return v.get<double>();
}

std::vector<double> vector_of(const json& v, const std::string& field) {
  if (!v.is_array()) throw ParseError(field, "expected an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k)
    out.push_back(number(v[k], field + "[" + std::to_string(k) + "]"));
  return out;
}

std::vector<std::vector<double>> matrix_of(const json& v, const std::string& field) {
  if (!v.is_array()) throw ParseError(field, "expected an array of arrays");
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(vector_of(v[i], field + "[" + std::to_string(i) + "]"));
    if (out.back().size() != out.front().size())
      throw ParseError(field, "row " + std::to_string(i + 1) + " has " +
                                  std::to_string(out.back().size()) + " entries, expected " +
                                  std::to_string(out.front().size()));
  }
  return out;
}

json solutions_json(const std::vector<MinimalSolution>& sols) {
  json arr = json::array();
  for (const auto& s : sols) arr.push_back(s.x);
  return arr;
}

json witnesses_json(const std::vector<MinimalSolution>& sols) {
  json arr = json::array();
  for (const auto& s : sols) {
    json e = json::array();
    if (s.witness)
      for (std::size_t j : *s.witness) e.push_back(j + 1);
    arr.push_back(std::move(e));
  }
  return arr;
}

}  // namespace

RawProblem parse_problem(const json& doc) {
  if (!doc.is_object()) throw ParseError("document", "expected a JSON object");
  RawProblem raw;
  if (!doc.contains("lambda")) throw ParseError("lambda", "missing");
  raw.lambda = number(doc.at("lambda"), "lambda");
  if (!doc.contains("D")) throw ParseError("D", "missing");
  if (!doc.contains("b2")) throw ParseError("b2", "missing");
  raw.d = matrix_of(doc.at("D"), "D");
  raw.b_lower = vector_of(doc.at("b2"), "b2");

  const bool has_a = doc.contains("A");
  const bool has_b1 = doc.contains("b1");
  if (has_a != has_b1)
    throw ParseError(has_a ? "b1" : "A", "\"A\" and \"b1\" must be given together");
  if (has_a) {
    raw.a = matrix_of(doc.at("A"), "A");
    raw.b_upper = vector_of(doc.at("b1"), "b1");
  }
  return raw;
}

RawProblem read_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileNotFound("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ParseError("document", e.what());
  }
  return parse_problem(doc);
}

json problem_to_json(const Problem& problem) {
  json doc;
  doc["lambda"] = problem.lambda().value();
  if (problem.num_upper() > 0) {
    doc["A"] = problem.a().to_rows();
    doc["b1"] = std::vector<double>(problem.b_upper().begin(), problem.b_upper().end());
  }
  doc["D"] = problem.d().to_rows();
  doc["b2"] = std::vector<double>(problem.b_lower().begin(), problem.b_lower().end());
  return doc;
}

json result_to_json(const SolveResult& result, const ResultFormat& format) {
  json doc;
  doc["feasible"] = result.feasible;
  if (result.reason) doc["reason"] = std::string(to_string(*result.reason));
  doc["x_max"] = result.report.x_max;
  if (result.z_star) doc["z_star"] = *result.z_star;
  doc["complete"] = result.complete;
  doc["optimal_solutions"] = solutions_json(result.optimal_solutions);
  if (format.include_witness) doc["optimal_witnesses"] = witnesses_json(result.optimal_solutions);
  if (format.include_minimal && result.minimal_solutions) {
    doc["minimal_solutions"] = solutions_json(*result.minimal_solutions);
    if (format.include_witness)
      doc["minimal_witnesses"] = witnesses_json(*result.minimal_solutions);
  }
  doc["stats"] = {
      {"nodes_expanded", result.stats.nodes_expanded},
      {"solutions_recorded", result.stats.solutions_recorded},
      {"assignment_count", result.stats.assignment_count.str()},
      {"elapsed_ms", result.stats.elapsed_ms},
  };
  return doc;
}

std::string result_to_table(const SolveResult& result, const ResultFormat& format,
                            bool include_stats) {
  std::ostringstream os;
  os << std::setprecision(12);
  auto print = [&](const char* title, const std::vector<MinimalSolution>& sols) {
    os << title << " (" << sols.size() << ")\n";
    for (const auto& s : sols) {
      os << std::setw(16) << s.objective << " |";
      for (double v : s.x) os << ' ' << std::setw(16) << v;
      if (format.include_witness && s.witness) {
        os << " | e =";
        for (std::size_t j : *s.witness) os << ' ' << j + 1;
      }
      os << '\n';
    }
  };

  os << "feasible: " << (result.feasible ? "yes" : "no") << '\n';
  if (result.reason) os << "reason: " << to_string(*result.reason) << '\n';
  os << "x_max:";
  for (double v : result.report.x_max) os << ' ' << v;
  os << '\n';
  if (result.z_star) os << "z_star: " << *result.z_star << '\n';
  if (!result.complete) os << "search incomplete (budget exhausted)\n";
  if (result.feasible) print("optimal solutions", result.optimal_solutions);
  if (format.include_minimal && result.minimal_solutions)
    print("minimal solutions", *result.minimal_solutions);
  if (include_stats) {
    os << "nodes_expanded: " << result.stats.nodes_expanded << '\n'
       << "solutions_recorded: " << result.stats.solutions_recorded << '\n'
       << "assignment_count: " << result.stats.assignment_count.str() << '\n'
       << "elapsed_ms: " << result.stats.elapsed_ms << '\n';
  }
  return os.str();
}

}  // namespace swfri::io

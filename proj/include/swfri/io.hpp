#pragma once

// JSON problem files and result documents.
//
// Problem file:
//   {"lambda": 2, "A": [[...], ...], "b1": [...], "D": [[...], ...], "b2": [...]}
// "A" and "b1" may be omitted together (no upper system). Other keys, such
// as "comment", are ignored.

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "swfri/problem.hpp"
#include "swfri/solver.hpp"

namespace swfri::io {

// Malformed document; field() names the offending key.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class FileNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RawProblem parse_problem(const nlohmann::json& doc);
RawProblem read_problem_file(const std::filesystem::path& path);
nlohmann::json problem_to_json(const Problem& problem);

struct ResultFormat {
  bool include_minimal = false;
  bool include_witness = false;
};

nlohmann::json result_to_json(const SolveResult& result, const ResultFormat& format = {});

// One solution per line, objective first.
std::string result_to_table(const SolveResult& result, const ResultFormat& format = {},
                            bool include_stats = false);

}  // namespace swfri::io

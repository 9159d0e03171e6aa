#include "swfri/problem.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace swfri {

InvalidLambda::InvalidLambda(double value)
    : std::invalid_argument([value] {
        std::ostringstream os;
        os << "lambda must be > -1, got " << value;
        return os.str();
      }()),
      value_(value) {}

UnsatisfiableThreshold::UnsatisfiableThreshold(double coefficient, double threshold)
    : std::domain_error([=] {
        std::ostringstream os;
        os << "coefficient " << coefficient << " is below threshold " << threshold
           << "; no x in [0,1] satisfies T(d, x) >= b";
        return os.str();
      }()) {}

namespace {

std::string join_issues(const std::vector<ValidationIssue>& issues) {
  std::ostringstream os;
  os << "invalid problem (" << issues.size() << " issue" << (issues.size() == 1 ? "" : "s")
     << ")";
  for (const auto& issue : issues) os << "\n  " << issue.field << ": " << issue.message;
  return os.str();
}

bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

std::string position(std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << "(" << i + 1 << "," << j + 1 << ")";
  return os.str();
}

void check_matrix(const char* name, const std::vector<std::vector<double>>& m, std::size_t n,
                  std::vector<ValidationIssue>& out) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != n) {
      std::ostringstream os;
      os << "row " << i + 1 << " has " << m[i].size() << " entries, expected " << n;
      out.push_back({name, i, std::nullopt, std::nullopt, os.str()});
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!in_unit(m[i][j])) {
        std::ostringstream os;
        os << "entry " << position(i, j) << " = " << m[i][j] << " is outside [0,1]";
        out.push_back({name, i, j, m[i][j], os.str()});
      }
    }
  }
}

void check_vector(const char* name, const std::vector<double>& v, std::size_t expected,
                  const char* rows_of, std::vector<ValidationIssue>& out) {
  if (v.size() != expected) {
    std::ostringstream os;
    os << "length " << v.size() << " does not match the " << expected << " rows of " << rows_of;
    out.push_back({name, std::nullopt, std::nullopt, std::nullopt, os.str()});
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!in_unit(v[i])) {
      std::ostringstream os;
      os << "entry " << i + 1 << " = " << v[i] << " is outside [0,1]";
      out.push_back({name, i, std::nullopt, v[i], os.str()});
    }
  }
}

}  // namespace

ValidationError::ValidationError(std::vector<ValidationIssue> issues)
    : std::invalid_argument(join_issues(issues)), issues_(std::move(issues)) {}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("ragged matrix row");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<double>> Matrix::to_rows() const {
  std::vector<std::vector<double>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
  return out;
}

std::variant<Problem, std::vector<ValidationIssue>> validate(const RawProblem& raw) {
  std::vector<ValidationIssue> issues;

  if (!raw.lambda) {
    issues.push_back({"lambda", std::nullopt, std::nullopt, std::nullopt, "missing"});
  } else if (!(*raw.lambda > -1.0) || !std::isfinite(*raw.lambda)) {
    std::ostringstream os;
    os << "must be a finite number > -1, got " << *raw.lambda;
    issues.push_back({"lambda", std::nullopt, std::nullopt, *raw.lambda, os.str()});
  }

  // D fixes n; D needs at least one row and one column.
  std::size_t n = 0;
  if (raw.d.empty()) {
    issues.push_back({"D", std::nullopt, std::nullopt, std::nullopt,
                      "must have at least one row"});
  } else {
    n = raw.d.front().size();
    if (n == 0)
      issues.push_back({"D", 0, std::nullopt, std::nullopt, "must have at least one column"});
  }
  if (n > 0) check_matrix("D", raw.d, n, issues);
  check_vector("b2", raw.b_lower, raw.d.size(), "D", issues);

  if (!raw.a.empty() && n > 0) check_matrix("A", raw.a, n, issues);
  check_vector("b1", raw.b_upper, raw.a.size(), "A", issues);

  if (!issues.empty()) return issues;

  return Problem(Matrix::from_rows(raw.a, n), raw.b_upper, Matrix::from_rows(raw.d, n),
                 raw.b_lower, Lambda(*raw.lambda));
}

Problem Problem::create(const RawProblem& raw) {
  auto result = validate(raw);
  if (auto* issues = std::get_if<std::vector<ValidationIssue>>(&result))
    throw ValidationError(std::move(*issues));
  return std::get<Problem>(std::move(result));
}

RawProblem Problem::to_raw() const {
  RawProblem raw;
  raw.lambda = lambda_.value();
  raw.a = a_.to_rows();
  raw.b_upper = b_upper_;
  raw.d = d_.to_rows();
  raw.b_lower = b_lower_;
  return raw;
}

}  // namespace swfri

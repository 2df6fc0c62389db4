#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quintic/quintic.hpp"

namespace quintic::cli {

/// Shortest "%.{precision}g" rendering. 17 digits round-trip any double.
std::string format_decimal(double value, int precision);

struct ComplexText {
  std::string re;
  std::string im;
  friend bool operator==(const ComplexText&, const ComplexText&) = default;
};

ComplexText format_complex(Complex z, int precision);
Complex parse_complex(const ComplexText& text);

struct MatchPairText {
  ComplexText resolvent_root;
  ComplexText pair_sum;
  std::string distance;
  friend bool operator==(const MatchPairText&, const MatchPairText&) = default;
};

struct MatchText {
  bool matched = false;
  std::string max_distance;
  std::string tolerance;
  std::vector<MatchPairText> pairs;
  friend bool operator==(const MatchText&, const MatchText&) = default;
};

/// Serializable record of one `solve` run. Exact quantities are rational
/// strings; numeric ones are decimal strings at `precision` significant
/// digits.
struct RunReport {
  int precision = 17;
  std::vector<std::string> quintic;    // a4 a3 a2 a1 a0
  std::vector<std::string> depressed;  // C D E F shift
  std::vector<std::string> resolvent;  // ascending degree, 11 entries
  std::string status;                  // clean | accepted | no_viable_split | error
  std::optional<int> root_index;
  std::optional<ComplexText> k, n, l, m;
  std::vector<ComplexText> quadratic;  // ascending degree
  std::vector<ComplexText> cubic;      // ascending degree
  std::vector<ComplexText> roots;
  std::vector<std::string> residuals;
  std::optional<MatchText> match;
  std::vector<std::string> notes;
  std::string error;
  double timing_ms = 0.0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

std::vector<std::string> exact_strings(const GeneralQuintic& q);
std::vector<std::string> exact_strings(const DepressedQuintic& dq);
std::vector<std::string> exact_strings(const ExactPolynomial& p);

MatchText format_match(const MatchReport& match, double tolerance, int precision);

nlohmann::json to_json(const RunReport& report);
RunReport run_report_from_json(const nlohmann::json& j);
std::string to_text(const RunReport& report);

/// Human-readable polynomial in `var`, highest degree first.
std::string polynomial_text(const ExactPolynomial& p, const std::string& var);

/// Top-level keys every JSON RunReport carries.
const std::vector<std::string>& run_report_keys();

}  // namespace quintic::cli

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cpcompat/model.hpp"

namespace cpcompat {

enum class RuleKind { kOverallMin, kParagraphMin, kParagraphExact100 };

/// One threshold predicate set by the comparing organization.
struct AcceptanceRule {
  RuleKind kind = RuleKind::kOverallMin;
  std::optional<double> threshold;  // absent for kParagraphExact100
  std::optional<NumberPath> path;   // absent for kOverallMin
  bool use_weighted = true;         // kOverallMin only
  bool inclusive = false;           // ">=" instead of ">"

  static AcceptanceRule overall_min(double threshold, bool use_weighted = true,
                                    bool inclusive = false);
  static AcceptanceRule paragraph_min(NumberPath path, double threshold, bool inclusive = false);
  static AcceptanceRule paragraph_exact_100(NumberPath path);

  /// Canonical rules-file spelling, e.g. "overall > 90 weighted".
  std::string to_string() const;

  friend bool operator==(const AcceptanceRule&, const AcceptanceRule&) = default;
};

struct RuleOutcome {
  AcceptanceRule rule;
  bool passed = false;
  double observed = 0.0;
};

struct Verdict {
  bool accepted = true;
  std::vector<RuleOutcome> rule_outcomes;
};

/// Raised when a paragraph rule names a path the report does not contain.
class UnknownPathError : public std::runtime_error {
 public:
  explicit UnknownPathError(const NumberPath& path);
  const NumberPath& path() const { return path_; }
  static constexpr std::string_view kCode = "UNKNOWN_PATH";

 private:
  NumberPath path_;
};

/// Conjunction of all rules; an empty rule list accepts.
Verdict evaluate(const ComparisonReport& report, const std::vector<AcceptanceRule>& rules);

/// Raised by parse_rules with the offending 1-based line.
class RulesSyntaxError : public std::runtime_error {
 public:
  RulesSyntaxError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses the line-oriented rules format described in RULES.md.
std::vector<AcceptanceRule> parse_rules(std::string_view text);

}  // namespace cpcompat

#include "cpcompat/acceptance.hpp"

#include <cmath>
#include <sstream>

namespace cpcompat {

AcceptanceRule AcceptanceRule::overall_min(double threshold, bool use_weighted, bool inclusive) {
  return {RuleKind::kOverallMin, threshold, std::nullopt, use_weighted, inclusive};
}

AcceptanceRule AcceptanceRule::paragraph_min(NumberPath path, double threshold, bool inclusive) {
  return {RuleKind::kParagraphMin, threshold, std::move(path), true, inclusive};
}

AcceptanceRule AcceptanceRule::paragraph_exact_100(NumberPath path) {
  return {RuleKind::kParagraphExact100, std::nullopt, std::move(path), true, false};
}

std::string AcceptanceRule::to_string() const {
  std::ostringstream out;
  const char* op = inclusive ? ">=" : ">";
  switch (kind) {
    case RuleKind::kOverallMin:
      out << "overall " << op << ' ' << *threshold << (use_weighted ? " weighted" : " unweighted");
      break;
    case RuleKind::kParagraphMin:
      out << "paragraph " << path->to_string() << ' ' << op << ' ' << *threshold;
      break;
    case RuleKind::kParagraphExact100:
      out << "paragraph " << path->to_string() << " == 100";
      break;
  }
  return out.str();
}

UnknownPathError::UnknownPathError(const NumberPath& path)
    : std::runtime_error("UNKNOWN_PATH: rule references paragraph " + path.to_string() +
                         " which is not in the report"),
      path_(path) {}

namespace {

constexpr double kExactTolerance = 1e-9;

bool exceeds(double observed, double threshold, bool inclusive) {
  return inclusive ? observed >= threshold : observed > threshold;
}

}  // namespace

Verdict evaluate(const ComparisonReport& report, const std::vector<AcceptanceRule>& rules) {
  Verdict verdict;
  for (const auto& rule : rules) {
    RuleOutcome outcome{rule, false, 0.0};
    if (rule.kind == RuleKind::kOverallMin) {
      outcome.observed = rule.use_weighted ? report.overall_weighted : report.overall_unweighted;
      outcome.passed = exceeds(outcome.observed, *rule.threshold, rule.inclusive);
    } else {
      const auto* score = report.find(*rule.path);
      if (!score) throw UnknownPathError(*rule.path);
      outcome.observed = score->combined_score;
      outcome.passed = rule.kind == RuleKind::kParagraphMin
                           ? exceeds(outcome.observed, *rule.threshold, rule.inclusive)
                           : std::abs(outcome.observed - 100.0) <= kExactTolerance;
    }
    verdict.accepted = verdict.accepted && outcome.passed;
    verdict.rule_outcomes.push_back(std::move(outcome));
  }
  return verdict;
}

}  // namespace cpcompat

#include "cpcompat/report_json.hpp"

namespace cpcompat {

nlohmann::ordered_json report_to_json(const ComparisonReport& report, const Verdict* verdict) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["report_version"] = kReportVersion;
  doc["mode"] = mode_name(report.mode);
  doc["policy_a"] = report.policy_a_name;
  doc["policy_b"] = report.policy_b_name;
  doc["overall_weighted"] = report.overall_weighted;
  doc["overall_unweighted"] = report.overall_unweighted;

  auto& paragraphs = doc["paragraphs"] = ordered_json::array();
  for (const auto& s : report.paragraph_scores) {
    ordered_json p;
    p["path"] = s.path.to_string();
    p["own_score"] = s.own_score;
    p["child_aggregate"] = s.child_aggregate ? ordered_json(*s.child_aggregate) : ordered_json();
    p["combined_score"] = s.combined_score;
    p["weight"] = s.weight;
    p["status"] = match_status_name(s.match_status);
    paragraphs.push_back(std::move(p));
  }

  auto& diagnostics = doc["diagnostics"] = ordered_json::array();
  for (const auto& d : report.diagnostics) {
    diagnostics.push_back({{"code", d.code}, {"path", d.path.to_string()}, {"message", d.message}});
  }

  if (verdict) {
    ordered_json v;
    v["accepted"] = verdict->accepted;
    auto& rules = v["rules"] = ordered_json::array();
    for (const auto& o : verdict->rule_outcomes) {
      rules.push_back({{"rule", o.rule.to_string()}, {"passed", o.passed}, {"observed", o.observed}});
    }
    doc["verdict"] = std::move(v);
  }
  return doc;
}

}  // namespace cpcompat

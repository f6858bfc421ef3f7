#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cpcompat/acceptance.hpp"
#include "cpcompat/comparison.hpp"
#include "cpcompat/merger.hpp"
#include "cpcompat/parser.hpp"
#include "cpcompat/report_json.hpp"

namespace cpcompat::cli {

namespace {

namespace fs = std::filesystem;

std::optional<std::string> read_file(const fs::path& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << path.string() << '\n';
    return std::nullopt;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool write_file(const fs::path& path, std::string_view content, std::ostream& err) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!(out << content) || !out.flush()) {
    err << "error: cannot write " << path.string() << '\n';
    return false;
  }
  return true;
}

void print_diagnostics(const fs::path& file, const std::vector<ParseDiagnostic>& diags,
                       std::ostream& err) {
  for (const auto& d : diags) {
    err << file.string() << ':' << d.line_number << ": " << severity_name(d.severity) << ' '
        << d.code << ": " << d.message << '\n';
  }
}

/// Reads and parses a policy; on failure returns the exit code to use.
struct Loaded {
  std::optional<Policy> policy;
  int status = kOk;
};

Loaded load_policy(const fs::path& file, std::ostream& err) {
  auto text = read_file(file, err);
  if (!text) return {std::nullopt, kIoError};
  auto result = parse_policy(*text, file.filename().string());
  print_diagnostics(file, result.diagnostics, err);
  if (!result.policy) return {std::nullopt, kParseError};
  return {std::move(result.policy), kOk};
}

struct LoadedRules {
  std::vector<AcceptanceRule> rules;
  int status = kOk;
};

LoadedRules load_rules(const fs::path& file, std::ostream& err) {
  auto text = read_file(file, err);
  if (!text) return {{}, kIoError};
  try {
    return {parse_rules(*text), kOk};
  } catch (const RulesSyntaxError& e) {
    err << file.string() << ": " << e.what() << '\n';
    return {{}, kRulesError};
  }
}

void print_summary(const ComparisonReport& report, std::ostream& err) {
  const auto flags = err.flags();
  const auto precision = err.precision();
  err << std::left << std::setw(14) << "PATH" << std::right << std::setw(10) << "S_i"
      << std::setw(6) << "W_i" << "  STATUS\n";
  for (const auto& s : report.paragraph_scores) {
    err << std::left << std::setw(14) << s.path.to_string() << std::right << std::fixed
        << std::setprecision(2) << std::setw(10) << s.combined_score << std::setw(6) << s.weight
        << "  " << match_status_name(s.match_status) << '\n';
  }
  err << "overall (weighted):   " << std::fixed << std::setprecision(2) << report.overall_weighted
      << '\n'
      << "overall (unweighted): " << report.overall_unweighted << '\n';
  for (const auto& d : report.diagnostics) {
    err << "note: " << d.code << ": " << d.message << '\n';
  }
  err.flags(flags);
  err.precision(precision);
}

void print_verdict(const Verdict& verdict, std::ostream& err) {
  for (const auto& o : verdict.rule_outcomes) {
    err << (o.passed ? "pass: " : "FAIL: ") << o.rule.to_string() << " (observed " << o.observed
        << ")\n";
  }
  err << (verdict.accepted ? "verdict: ACCEPTED\n" : "verdict: REJECTED\n");
}

struct Evaluated {
  std::optional<Verdict> verdict;
  int status = kOk;
};

Evaluated evaluate_rules(const ComparisonReport& report, const fs::path& rules_file,
                         std::ostream& err) {
  auto rules = load_rules(rules_file, err);
  if (rules.status != kOk) return {std::nullopt, rules.status};
  try {
    return {evaluate(report, rules.rules), kOk};
  } catch (const UnknownPathError& e) {
    err << rules_file.string() << ": " << e.what() << '\n';
    return {std::nullopt, kRulesError};
  }
}

}  // namespace

int cmd_validate(const fs::path& file, std::ostream& err) {
  return load_policy(file, err).status;
}

int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err) {
  auto a = load_policy(args.file_a, err);
  if (a.status != kOk) return a.status;
  auto b = load_policy(args.file_b, err);
  if (b.status != kOk) return b.status;

  const auto report = compare(*a.policy, *b.policy, args.mode);
  print_summary(report, err);

  Evaluated evaluated;
  if (args.rules) {
    evaluated = evaluate_rules(report, *args.rules, err);
    if (evaluated.status != kOk) return evaluated.status;
    print_verdict(*evaluated.verdict, err);
  }

  const auto json =
      report_to_json(report, evaluated.verdict ? &*evaluated.verdict : nullptr).dump(2) + "\n";
  if (args.report_out) {
    if (!write_file(*args.report_out, json, err)) return kIoError;
  } else {
    out << json;
  }
  if (evaluated.verdict && !evaluated.verdict->accepted) return kRejected;
  return kOk;
}

int cmd_merge(const MergeArgs& args, std::ostream& err) {
  auto a = load_policy(args.file_a, err);
  if (a.status != kOk) return a.status;
  auto b = load_policy(args.file_b, err);
  if (b.status != kOk) return b.status;

  const auto report = compare(*a.policy, *b.policy, args.mode);
  print_summary(report, err);
  auto evaluated = evaluate_rules(report, args.rules, err);
  if (evaluated.status != kOk) return evaluated.status;
  print_verdict(*evaluated.verdict, err);
  if (!evaluated.verdict->accepted) return kRejected;

  const auto merged = merge(*a.policy, *b.policy, report, *evaluated.verdict, args.mode);
  if (!write_file(args.out, render_policy(merged), err)) return kIoError;
  return kOk;
}

}  // namespace cpcompat::cli

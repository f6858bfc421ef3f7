#include <charconv>
#include <cmath>
#include <sstream>

#include "cpcompat/acceptance.hpp"

namespace cpcompat {

RulesSyntaxError::RulesSyntaxError(std::size_t line, const std::string& message)
    : std::runtime_error("rules line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string> split(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(std::move(t));
  return tokens;
}

double parse_threshold(std::size_t line, const std::string& token) {
  double value = 0.0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size() || !std::isfinite(value)) {
    throw RulesSyntaxError(line, "'" + token + "' is not a number");
  }
  if (value < 0.0 || value > 100.0) {
    throw RulesSyntaxError(line, "threshold " + token + " is outside [0, 100]");
  }
  return value;
}

bool parse_operator(std::size_t line, const std::string& token) {
  if (token == ">") return false;
  if (token == ">=") return true;
  throw RulesSyntaxError(line, "expected '>' or '>=', got '" + token + "'");
}

AcceptanceRule parse_line(std::size_t line, const std::vector<std::string>& t) {
  if (t[0] == "overall") {
    if (t.size() < 3 || t.size() > 4) {
      throw RulesSyntaxError(line, "expected 'overall <op> <number> [weighted|unweighted]'");
    }
    const bool inclusive = parse_operator(line, t[1]);
    const double threshold = parse_threshold(line, t[2]);
    bool weighted = true;
    if (t.size() == 4) {
      if (t[3] == "unweighted") {
        weighted = false;
      } else if (t[3] != "weighted") {
        throw RulesSyntaxError(line, "expected 'weighted' or 'unweighted', got '" + t[3] + "'");
      }
    }
    return AcceptanceRule::overall_min(threshold, weighted, inclusive);
  }
  if (t[0] == "paragraph") {
    if (t.size() != 4) throw RulesSyntaxError(line, "expected 'paragraph <path> <op> <number>'");
    auto path = NumberPath::from_string(t[1]);
    if (!path) throw RulesSyntaxError(line, "'" + t[1] + "' is not a section number");
    if (t[2] == "==") {
      if (parse_threshold(line, t[3]) != 100.0) {
        throw RulesSyntaxError(line, "'==' rules only accept 100");
      }
      return AcceptanceRule::paragraph_exact_100(*path);
    }
    const bool inclusive = parse_operator(line, t[2]);
    return AcceptanceRule::paragraph_min(*path, parse_threshold(line, t[3]), inclusive);
  }
  throw RulesSyntaxError(line, "unknown rule '" + t[0] + "'");
}

}  // namespace

std::vector<AcceptanceRule> parse_rules(std::string_view text) {
  std::vector<AcceptanceRule> rules;
  std::size_t line = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line;
    auto tokens = split(raw);
    if (tokens.empty() || tokens[0].starts_with('#')) continue;
    rules.push_back(parse_line(line, tokens));
  }
  return rules;
}

}  // namespace cpcompat

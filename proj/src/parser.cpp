#include "cpcompat/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <set>

namespace cpcompat {

std::string_view severity_name(Severity s) {
  return s == Severity::kError ? "ERROR" : "WARNING";
}

bool ParseResult::has_errors() const {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const auto& d) { return d.severity == Severity::kError; });
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

/// Splits off the first whitespace-delimited token; `rest` is left-trimmed.
std::string_view take_token(std::string_view s, std::string_view& rest) {
  auto end = std::find_if(s.begin(), s.end(), is_space);
  auto token = s.substr(0, static_cast<std::size_t>(end - s.begin()));
  rest = trim(s.substr(token.size()));
  return token;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool is_path_token(std::string_view token) {
  if (token.empty() || !std::isdigit(static_cast<unsigned char>(token.front()))) return false;
  return std::all_of(token.begin(), token.end(),
                     [](char c) { return c == '.' || (c >= '0' && c <= '9'); });
}

bool has_lowercase(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](char c) { return std::islower(static_cast<unsigned char>(c)) != 0; });
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

class Parser {
 public:
  explicit Parser(std::string name) { policy_.name = std::move(name); }

  ParseResult run(std::string_view source) {
    std::size_t line_number = 0;
    while (!source.empty() || line_number == 0) {
      auto nl = source.find('\n');
      auto line = source.substr(0, nl);
      source = nl == std::string_view::npos ? std::string_view{} : source.substr(nl + 1);
      ++line_number;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      classify(line_number, trim(line));
      if (nl == std::string_view::npos) break;
    }
    ParseResult result;
    result.diagnostics = std::move(diagnostics_);
    if (!result.has_errors()) result.policy = std::move(policy_);
    return result;
  }

 private:
  void report(std::size_t line, Severity sev, std::string_view code, std::string message) {
    diagnostics_.push_back({line, sev, std::string(code), std::move(message)});
  }

  void classify(std::size_t line, std::string_view text) {
    if (text.empty()) return;
    if (text.starts_with("//")) return comment(line, text.substr(2));
    std::string_view rest;
    auto first = take_token(text, rest);
    if (is_path_token(first)) return heading(line, first, rest);
    if (lower(first) == "connection") {
      std::string_view tail;
      auto second = take_token(rest, tail);
      if (!second.empty() && tail.empty()) return connection(line, second);
    }
    option(line, text);
  }

  void comment(std::size_t line, std::string_view body) {
    if (open_.empty()) {
      report(line, Severity::kWarning, diag::kCommentBeforeSection,
             "comment before the first section is dropped");
      return;
    }
    open_.back()->comments.emplace_back(body);
  }

  void heading(std::size_t line, std::string_view path_token, std::string_view rest) {
    auto path = NumberPath::from_string(path_token);
    if (!path) {
      report(line, Severity::kError, diag::kBadNumber,
             "malformed section number '" + std::string(path_token) + "'");
      return;
    }
    const auto where = path->to_string();
    if (seen_.contains(*path)) {
      report(line, Severity::kError, diag::kDuplicateSection, "section " + where + " repeats");
      return;
    }

    Paragraph p;
    p.path = *path;
    // A trailing standalone integer is the weight.
    auto last_space = std::find_if(rest.rbegin(), rest.rend(), is_space);
    auto last_token = rest.substr(rest.size() - static_cast<std::size_t>(last_space - rest.rbegin()));
    if (all_digits(last_token)) {
      std::uint32_t w = 0;
      auto [end, ec] = std::from_chars(last_token.data(), last_token.data() + last_token.size(), w);
      if (ec != std::errc{} || w == 0) {
        report(line, Severity::kError, diag::kBadWeight,
               "section " + where + " weight must be an integer >= 1");
        return;
      }
      p.weight = w;
      rest = trim(rest.substr(0, rest.size() - last_token.size()));
    }
    p.title = std::string(rest);

    std::vector<Paragraph>* siblings = &policy_.roots;
    std::size_t keep = 0;
    if (auto parent = path->parent()) {
      auto it = std::find_if(open_.begin(), open_.end(),
                             [&](const Paragraph* q) { return q->path == *parent; });
      if (it == open_.end()) {
        if (seen_.contains(*parent)) {
          report(line, Severity::kError, diag::kOutOfOrder,
                 "section " + where + " appears after its parent " + parent->to_string() +
                     " was closed by a later section");
        } else {
          report(line, Severity::kError, diag::kOrphanSection,
                 "section " + where + " has no parent section " + parent->to_string());
        }
        return;
      }
      siblings = &(*it)->children;
      keep = static_cast<std::size_t>(it - open_.begin()) + 1;
    }
    const std::uint32_t expected = siblings->empty() ? 1 : siblings->back().path.last() + 1;
    if (!siblings->empty() && siblings->back().path.last() >= path->last()) {
      report(line, Severity::kError, diag::kOutOfOrder,
             "section " + where + " does not follow " + siblings->back().path.to_string());
      return;
    }
    if (path->last() != expected) {
      report(line, Severity::kWarning, diag::kNumberingGap,
             "section " + where + " skips number " + std::to_string(expected));
    }
    if (path->depth() > 4) {
      report(line, Severity::kWarning, diag::kDepthExceeds4,
             "section " + where + " is nested deeper than four levels");
    }
    if (path->depth() == 1 && has_lowercase(p.title)) {
      report(line, Severity::kWarning, diag::kTitleNotUppercase,
             "main section " + where + " title is not all capitals");
    }

    seen_.insert(*path);
    siblings->push_back(std::move(p));
    open_.resize(keep);
    open_.push_back(&siblings->back());
  }

  void connection(std::size_t line, std::string_view token) {
    if (open_.empty()) {
      report(line, Severity::kError, diag::kConnectionBeforeSection,
             "connection line before the first section");
      return;
    }
    Connective c = Connective::kNone;
    if (token == "AND") c = Connective::kAnd;
    if (token == "OR") c = Connective::kOr;
    if (c == Connective::kNone) {
      report(line, Severity::kError, diag::kBadConnective,
             "connection must be AND or OR, got '" + std::string(token) + "'");
      return;
    }
    auto* p = open_.back();
    if (p->connective != Connective::kNone) {
      report(line, Severity::kError, diag::kDuplicateConnective,
             "section " + p->path.to_string() + " already declares a connection");
      return;
    }
    p->connective = c;
  }

  void option(std::size_t line, std::string_view text) {
    if (open_.empty()) {
      report(line, Severity::kError, diag::kOptionBeforeSection,
             "option line before the first section");
      return;
    }
    auto* p = open_.back();
    std::optional<char> label;
    std::string_view rest;
    auto first = take_token(text, rest);
    if (first.size() == 2 && first[1] == ')' && std::isalpha(static_cast<unsigned char>(first[0]))) {
      if (!std::islower(static_cast<unsigned char>(first[0]))) {
        report(line, Severity::kError, diag::kBadOptionLabel,
               "option label must be a lowercase letter, got '" + std::string(first) + "'");
        return;
      }
      label = first[0];
      text = rest;
    }
    std::optional<Keyword> keyword;
    if (auto kw = keyword_from_token(take_token(text, rest))) {
      keyword = kw;
      text = rest;
    }
    if (text.empty()) {
      report(line, Severity::kError, diag::kEmptyOption, "option has no phrase");
      return;
    }
    if (label && std::any_of(p->options.begin(), p->options.end(),
                             [&](const auto& o) { return o.label == label; })) {
      report(line, Severity::kError, diag::kDuplicateOptionLabel,
             "option label '" + std::string(1, *label) + "' repeats in section " +
                 p->path.to_string());
      return;
    }
    p->options.emplace_back(label, keyword, std::string(text));
  }

  Policy policy_;
  std::vector<ParseDiagnostic> diagnostics_;
  std::set<NumberPath> seen_;
  // Chain of currently open paragraphs, outermost first. Pointers stay valid
  // because only the innermost open sibling list ever grows.
  std::vector<Paragraph*> open_;
};

}  // namespace

ParseResult parse_policy(std::string_view source, std::string name) {
  return Parser(std::move(name)).run(source);
}

}  // namespace cpcompat

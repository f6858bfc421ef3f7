#pragma once

// Domain types for standardized certificate policies and the artifacts
// produced when two policies are compared.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cpcompat {

/// Dotted section number such as 1.3.1.1. Never empty; every segment >= 1.
class NumberPath {
 public:
  explicit NumberPath(std::vector<std::uint32_t> segments);

  /// Parses "1.3.1" (a single trailing dot is tolerated). Returns nullopt on
  /// anything else, including zero segments.
  static std::optional<NumberPath> from_string(std::string_view text);

  const std::vector<std::uint32_t>& segments() const { return segments_; }
  std::size_t depth() const { return segments_.size(); }
  std::uint32_t last() const { return segments_.back(); }

  /// The path with the final segment removed; nullopt at depth 1.
  std::optional<NumberPath> parent() const;
  NumberPath child(std::uint32_t segment) const;
  bool is_parent_of(const NumberPath& other) const;

  std::string to_string() const;

  friend bool operator==(const NumberPath&, const NumberPath&) = default;
  friend auto operator<=>(const NumberPath&, const NumberPath&) = default;

 private:
  std::vector<std::uint32_t> segments_;
};

/// RFC 2119 requirement level used on option lines.
enum class Keyword { kMust, kRecommended, kOptional, kNot };

/// Fuzzy value of a keyword: MUST 1.0, RECOMMENDED 0.8, OPTIONAL 0.5, NOT 0.0.
constexpr double keyword_value(Keyword k) {
  switch (k) {
    case Keyword::kMust:
      return 1.0;
    case Keyword::kRecommended:
      return 0.8;
    case Keyword::kOptional:
      return 0.5;
    case Keyword::kNot:
      return 0.0;
  }
  return 1.0;
}

/// An option without a keyword is an unqualified requirement and scores as MUST.
constexpr double keyword_value(const std::optional<Keyword>& k) {
  return k ? keyword_value(*k) : 1.0;
}

std::string_view keyword_name(Keyword k);
std::optional<Keyword> keyword_from_token(std::string_view token);

inline constexpr Keyword kAllKeywords[] = {Keyword::kMust, Keyword::kRecommended,
                                           Keyword::kOptional, Keyword::kNot};

/// Lowercase, trim, and collapse internal whitespace runs to one space.
std::string normalize_phrase(std::string_view s);

struct PolicyOption {
  std::optional<char> label;
  std::optional<Keyword> keyword;
  std::string phrase;
  std::string normalized_phrase;

  PolicyOption() = default;
  PolicyOption(std::optional<char> label, std::optional<Keyword> keyword, std::string phrase);

  friend bool operator==(const PolicyOption&, const PolicyOption&) = default;
};

enum class Connective { kNone, kAnd, kOr };

std::string_view connective_name(Connective c);

struct Paragraph {
  NumberPath path{{1}};
  std::string title;
  std::uint32_t weight = 1;
  std::vector<PolicyOption> options;
  Connective connective = Connective::kNone;
  /// Text following "//", kept verbatim. Never scored.
  std::vector<std::string> comments;
  std::vector<Paragraph> children;

  friend bool operator==(const Paragraph&, const Paragraph&) = default;
};

struct Policy {
  std::string name;
  std::vector<Paragraph> roots;

  friend bool operator==(const Policy&, const Policy&) = default;

  /// Depth-first lookup by path; nullptr when absent.
  const Paragraph* find(const NumberPath& path) const;
};

/// Checks the tree invariants (path extension, strict sibling order, weights,
/// unique labels). Returns a description of the first violation, or nullopt.
std::optional<std::string> check_invariants(const Policy& policy);

/// Tree equality that ignores option labels. Labels are presentation only;
/// the renderer synthesizes them, so round trips compare with this.
bool same_structure(const Paragraph& a, const Paragraph& b);
bool same_structure(const Policy& a, const Policy& b);

/// Visits every paragraph in document (pre-)order.
template <typename Fn>
void for_each_paragraph(const std::vector<Paragraph>& nodes, Fn&& fn) {
  for (const auto& p : nodes) {
    fn(p);
    for_each_paragraph(p.children, fn);
  }
}

enum class ComparisonMode { kMerge, kAcquire };

std::string_view mode_name(ComparisonMode m);
std::optional<ComparisonMode> mode_from_string(std::string_view s);

enum class MatchStatus { kMatched, kMissingInA, kMissingInB, kBothEmpty };

std::string_view match_status_name(MatchStatus s);

struct ParagraphScore {
  NumberPath path{{1}};
  double own_score = 0.0;
  std::optional<double> child_aggregate;
  double combined_score = 0.0;
  std::uint32_t weight = 1;
  MatchStatus match_status = MatchStatus::kMatched;

  friend bool operator==(const ParagraphScore&, const ParagraphScore&) = default;
};

struct ComparisonDiagnostic {
  std::string code;  // TITLE_MISMATCH, MISSING_IN_A, MISSING_IN_B, ...
  NumberPath path{{1}};
  std::string message;

  friend bool operator==(const ComparisonDiagnostic&, const ComparisonDiagnostic&) = default;
};

struct ComparisonReport {
  ComparisonMode mode = ComparisonMode::kMerge;
  std::string policy_a_name;
  std::string policy_b_name;
  std::vector<ParagraphScore> paragraph_scores;
  double overall_weighted = 0.0;
  double overall_unweighted = 0.0;
  std::vector<ComparisonDiagnostic> diagnostics;

  friend bool operator==(const ComparisonReport&, const ComparisonReport&) = default;

  const ParagraphScore* find(const NumberPath& path) const;
  /// Scores of depth-1 entries, in report order.
  std::vector<const ParagraphScore*> top_level() const;
};

/// A pairing of option j of A with an equal option k of B.
struct ProvisionalMatch {
  std::size_t option_index_a = 0;
  std::size_t option_index_b = 0;
  double o_jk = 100.0;
  double keyword_factor = 1.0;

  friend bool operator==(const ProvisionalMatch&, const ProvisionalMatch&) = default;
};

}  // namespace cpcompat

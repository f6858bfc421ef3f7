#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpcompat/model.hpp"

namespace cpcompat {

enum class Severity { kWarning, kError };

std::string_view severity_name(Severity s);

struct ParseDiagnostic {
  std::size_t line_number = 0;  // 1-based
  Severity severity = Severity::kWarning;
  std::string code;
  std::string message;

  friend bool operator==(const ParseDiagnostic&, const ParseDiagnostic&) = default;
};

// Stable diagnostic codes.
namespace diag {
inline constexpr std::string_view kDepthExceeds4 = "DEPTH_EXCEEDS_4";
inline constexpr std::string_view kBadNumber = "BAD_NUMBER";
inline constexpr std::string_view kDuplicateSection = "DUPLICATE_SECTION";
inline constexpr std::string_view kOrphanSection = "ORPHAN_SECTION";
inline constexpr std::string_view kOutOfOrder = "OUT_OF_ORDER";
inline constexpr std::string_view kNumberingGap = "NUMBERING_GAP";
inline constexpr std::string_view kBadWeight = "BAD_WEIGHT";
inline constexpr std::string_view kTitleNotUppercase = "TITLE_NOT_UPPERCASE";
inline constexpr std::string_view kBadConnective = "BAD_CONNECTIVE";
inline constexpr std::string_view kDuplicateConnective = "DUPLICATE_CONNECTIVE";
inline constexpr std::string_view kOptionBeforeSection = "OPTION_BEFORE_SECTION";
inline constexpr std::string_view kConnectionBeforeSection = "CONNECTION_BEFORE_SECTION";
inline constexpr std::string_view kCommentBeforeSection = "COMMENT_BEFORE_SECTION";
inline constexpr std::string_view kBadOptionLabel = "BAD_OPTION_LABEL";
inline constexpr std::string_view kDuplicateOptionLabel = "DUPLICATE_OPTION_LABEL";
inline constexpr std::string_view kEmptyOption = "EMPTY_OPTION";
}  // namespace diag

struct ParseResult {
  /// Absent when at least one ERROR diagnostic was produced.
  std::optional<Policy> policy;
  std::vector<ParseDiagnostic> diagnostics;

  bool has_errors() const;
};

/// Parses the standardized CP text format (see FORMAT.md). Pure function of
/// its arguments. CRLF line endings are accepted.
ParseResult parse_policy(std::string_view source, std::string name = {});

/// Canonical text rendering; parse_policy(render_policy(p)) is structurally
/// equal to p for every valid p.
std::string render_policy(const Policy& policy);

}  // namespace cpcompat

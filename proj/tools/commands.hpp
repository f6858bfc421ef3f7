#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "cpcompat/model.hpp"

namespace cpcompat::cli {

// Process exit codes; the complete machine contract of the tool.
enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kParseError = 2,
  kRejected = 3,
  kRulesError = 4,
  kUsage = 64,
};

int cmd_validate(const std::filesystem::path& file, std::ostream& err);

struct CompareArgs {
  std::filesystem::path file_a;
  std::filesystem::path file_b;
  ComparisonMode mode = ComparisonMode::kMerge;
  std::optional<std::filesystem::path> rules;
  std::optional<std::filesystem::path> report_out;
};

/// JSON report goes to `report_out` when set, else to `out`. The human
/// summary goes to `err`.
int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err);

struct MergeArgs {
  std::filesystem::path file_a;
  std::filesystem::path file_b;
  ComparisonMode mode = ComparisonMode::kMerge;
  std::filesystem::path rules;
  std::filesystem::path out;
};

int cmd_merge(const MergeArgs& args, std::ostream& err);

}  // namespace cpcompat::cli

#pragma once

#include <stdexcept>

#include "cpcompat/acceptance.hpp"
#include "cpcompat/model.hpp"

namespace cpcompat {

class RejectedInputError : public std::runtime_error {
 public:
  RejectedInputError() : std::runtime_error("REJECTED_INPUT: verdict does not accept the policy") {}
  static constexpr std::string_view kCode = "REJECTED_INPUT";
};

/// Comment bodies added by the merger start with one of these markers.
inline constexpr std::string_view kUnmatchedMarker = " unmatched:";
inline constexpr std::string_view kConflictMarker = " conflict:";

/// Builds a unified policy prototype for human review.
///
/// Acquire mode returns A unchanged. Merge mode takes the path union of both
/// outlines. Matched options are kept once with the stricter keyword (A's on
/// a tie); unmatched options from either side are kept and annotated. A's
/// weights, titles and connectives win conflicts, which are annotated too.
///
/// Throws RejectedInputError unless verdict.accepted.
Policy merge(const Policy& a, const Policy& b, const ComparisonReport& report,
             const Verdict& verdict, ComparisonMode mode);

/// Removes the merger's annotation comments.
Policy strip_annotations(Policy p);

}  // namespace cpcompat

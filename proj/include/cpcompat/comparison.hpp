#pragma once

#include <optional>
#include <vector>

#include "cpcompat/model.hpp"

namespace cpcompat {

struct AlignedPair {
  NumberPath path;
  const Paragraph* in_a = nullptr;
  const Paragraph* in_b = nullptr;
};

/// Pairs paragraphs by exact path: A's document order first, then paths only
/// B has, in B's document order. The returned pointers borrow from a and b.
std::vector<AlignedPair> align(const Policy& a, const Policy& b);

enum class Execution {
  kSerial,    // reference implementation
  kParallel,  // OpenMP over aligned pairs and tree levels
};

/// Scores B against A. W_i and connectives come from A. Overall scores are
/// taken over depth-1 entries; sub-paragraphs are folded into their parents
/// bottom-up first. Both execution modes produce bit-identical reports.
ComparisonReport compare(const Policy& a, const Policy& b, ComparisonMode mode,
                         Execution exec = Execution::kParallel);

/// Option-level scores for a batch of aligned pairs, one per entry.
std::vector<double> score_pairs(const std::vector<AlignedPair>& pairs, ComparisonMode mode,
                                Execution exec);

}  // namespace cpcompat

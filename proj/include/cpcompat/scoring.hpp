#pragma once

// Paragraph-level scoring.
//
// Options of A are paired one-to-one with equal options of B (equality of
// normalized phrases; the earliest unconsumed B option wins). Each pairing
// contributes 100 * (1 - |v_j - v_k|) where v is the keyword value. The
// paragraph score then depends on A's connective and the comparison mode:
//
//   OR                 max over pairings (0 when nothing pairs)
//   AND, merge         sum / max(|options A|, |options B|)
//   AND, acquire       sum / |options A|
//
// A paragraph without a connective scores as AND. When only one side has
// options the score is 0 under merge and 100 under acquire; when neither side
// has options the paragraph is vacuously compatible (100).

#include <span>
#include <utility>
#include <vector>

#include "cpcompat/model.hpp"

namespace cpcompat {

std::vector<ProvisionalMatch> match_options(std::span<const PolicyOption> opts_a,
                                            std::span<const PolicyOption> opts_b);

/// Options-only view of one side of an aligned pair. A missing paragraph is
/// a side with no options.
struct OptionSide {
  std::span<const PolicyOption> options;
  Connective connective = Connective::kNone;

  static OptionSide of(const Paragraph* p) {
    return p ? OptionSide{p->options, p->connective} : OptionSide{};
  }
};

double score_options(OptionSide a, OptionSide b, ComparisonMode mode);

double score_paragraph_options(const Paragraph& p_a, const Paragraph& p_b, ComparisonMode mode);

/// (own + child_aggregate * n_children) / (1 + n_children). A paragraph's own
/// score carries less weight the more sub-paragraphs it has.
double combine_with_children(double own_score, double child_aggregate, std::size_t n_children);

/// Weighted mean of child combined scores. Requires a non-empty list.
double child_aggregate(std::span<const std::pair<double, std::uint32_t>> children_scores);

}  // namespace cpcompat

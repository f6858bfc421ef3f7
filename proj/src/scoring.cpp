#include "cpcompat/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cpcompat {

std::vector<ProvisionalMatch> match_options(std::span<const PolicyOption> opts_a,
                                            std::span<const PolicyOption> opts_b) {
  std::vector<ProvisionalMatch> matches;
  std::vector<bool> consumed(opts_b.size(), false);
  for (std::size_t j = 0; j < opts_a.size(); ++j) {
    for (std::size_t k = 0; k < opts_b.size(); ++k) {
      if (consumed[k] || opts_a[j].normalized_phrase != opts_b[k].normalized_phrase) continue;
      consumed[k] = true;
      const double factor =
          1.0 - std::abs(keyword_value(opts_a[j].keyword) - keyword_value(opts_b[k].keyword));
      matches.push_back({j, k, 100.0, factor});
      break;
    }
  }
  return matches;
}

double score_options(OptionSide a, OptionSide b, ComparisonMode mode) {
  const bool a_has = !a.options.empty();
  const bool b_has = !b.options.empty();
  if (!a_has && !b_has) return 100.0;
  if (a_has != b_has) return mode == ComparisonMode::kMerge ? 0.0 : 100.0;

  const auto matches = match_options(a.options, b.options);
  if (a.connective == Connective::kOr) {
    double best = 0.0;
    for (const auto& m : matches) best = std::max(best, m.o_jk * m.keyword_factor);
    return best;
  }
  double sum = 0.0;
  for (const auto& m : matches) sum += m.o_jk * m.keyword_factor;
  const std::size_t denominator = mode == ComparisonMode::kMerge
                                      ? std::max(a.options.size(), b.options.size())
                                      : a.options.size();
  return sum / static_cast<double>(denominator);
}

double score_paragraph_options(const Paragraph& p_a, const Paragraph& p_b, ComparisonMode mode) {
  return score_options(OptionSide::of(&p_a), OptionSide::of(&p_b), mode);
}

double combine_with_children(double own_score, double child_aggregate, std::size_t n_children) {
  if (n_children == 0) throw std::invalid_argument("combine_with_children: no children");
  const auto n = static_cast<double>(n_children);
  return (own_score + child_aggregate * n) / (1.0 + n);
}

double child_aggregate(std::span<const std::pair<double, std::uint32_t>> children_scores) {
  if (children_scores.empty()) throw std::invalid_argument("child_aggregate: empty list");
  double weighted = 0.0;
  double total = 0.0;
  for (const auto& [score, weight] : children_scores) {
    weighted += score * weight;
    total += weight;
  }
  return weighted / total;
}

}  // namespace cpcompat

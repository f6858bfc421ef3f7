#include "cpcompat/comparison.hpp"

#include <algorithm>
#include <map>

#include "cpcompat/scoring.hpp"

namespace cpcompat {

namespace {

void index_paths(const std::vector<Paragraph>& nodes, std::map<NumberPath, const Paragraph*>& out) {
  for_each_paragraph(nodes, [&](const Paragraph& p) { out.emplace(p.path, &p); });
}

MatchStatus status_of(const AlignedPair& pair) {
  if (!pair.in_a) return MatchStatus::kMissingInA;
  if (!pair.in_b) return MatchStatus::kMissingInB;
  if (pair.in_a->options.empty() && pair.in_b->options.empty()) return MatchStatus::kBothEmpty;
  return MatchStatus::kMatched;
}

void add_diagnostics(const AlignedPair& pair, std::vector<ComparisonDiagnostic>& out) {
  const auto where = pair.path.to_string();
  if (!pair.in_a) {
    out.push_back({"MISSING_IN_A", pair.path, "paragraph " + where + " exists only in B"});
  } else if (!pair.in_b) {
    out.push_back({"MISSING_IN_B", pair.path, "paragraph " + where + " exists only in A"});
  } else {
    if (normalize_phrase(pair.in_a->title) != normalize_phrase(pair.in_b->title)) {
      out.push_back({"TITLE_MISMATCH", pair.path,
                     "paragraph " + where + " is titled '" + pair.in_a->title + "' in A and '" +
                         pair.in_b->title + "' in B"});
    }
    if (pair.in_a->connective != pair.in_b->connective) {
      out.push_back({"CONNECTIVE_MISMATCH", pair.path,
                     "paragraph " + where + " connective " +
                         std::string(connective_name(pair.in_a->connective)) + " in A, " +
                         std::string(connective_name(pair.in_b->connective)) +
                         " in B; A's governs"});
    }
  }
  if (pair.path.depth() > 4) {
    out.push_back({"DEPTH_EXCEEDS_4", pair.path,
                   "paragraph " + where + " is nested deeper than four levels"});
  }
}

}  // namespace

std::vector<AlignedPair> align(const Policy& a, const Policy& b) {
  std::map<NumberPath, const Paragraph*> in_a;
  std::map<NumberPath, const Paragraph*> in_b;
  index_paths(a.roots, in_a);
  index_paths(b.roots, in_b);

  std::vector<AlignedPair> pairs;
  pairs.reserve(in_a.size() + in_b.size());
  for_each_paragraph(a.roots, [&](const Paragraph& p) {
    auto it = in_b.find(p.path);
    pairs.push_back({p.path, &p, it == in_b.end() ? nullptr : it->second});
  });
  for_each_paragraph(b.roots, [&](const Paragraph& p) {
    if (!in_a.contains(p.path)) pairs.push_back({p.path, nullptr, &p});
  });
  return pairs;
}

std::vector<double> score_pairs(const std::vector<AlignedPair>& pairs, ComparisonMode mode,
                                Execution exec) {
  std::vector<double> scores(pairs.size());
  const auto n = static_cast<std::ptrdiff_t>(pairs.size());
  if (exec == Execution::kSerial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      scores[i] = score_options(OptionSide::of(pairs[i].in_a), OptionSide::of(pairs[i].in_b), mode);
    }
  } else {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      scores[i] = score_options(OptionSide::of(pairs[i].in_a), OptionSide::of(pairs[i].in_b), mode);
    }
  }
  return scores;
}

ComparisonReport compare(const Policy& a, const Policy& b, ComparisonMode mode, Execution exec) {
  const auto pairs = align(a, b);
  const auto own = score_pairs(pairs, mode, exec);

  std::map<NumberPath, std::size_t> index;
  std::size_t max_depth = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    index.emplace(pairs[i].path, i);
    max_depth = std::max(max_depth, pairs[i].path.depth());
  }
  std::vector<std::vector<std::size_t>> levels(max_depth + 1);
  for (std::size_t i = 0; i < pairs.size(); ++i) levels[pairs[i].path.depth()].push_back(i);

  // Children are folded in from A's side only: N is A's child count.
  std::vector<double> combined(pairs.size());
  std::vector<std::optional<double>> aggregate(pairs.size());
  auto fold = [&](std::size_t i) {
    const Paragraph* p = pairs[i].in_a;
    if (!p || p->children.empty()) {
      combined[i] = own[i];
      return;
    }
    std::vector<std::pair<double, std::uint32_t>> kids;
    kids.reserve(p->children.size());
    for (const auto& c : p->children) kids.emplace_back(combined[index.at(c.path)], c.weight);
    aggregate[i] = child_aggregate(kids);
    combined[i] = combine_with_children(own[i], *aggregate[i], kids.size());
  };
  for (std::size_t d = max_depth; d >= 1; --d) {
    const auto& level = levels[d];
    const auto m = static_cast<std::ptrdiff_t>(level.size());
    if (exec == Execution::kSerial) {
      for (std::ptrdiff_t k = 0; k < m; ++k) fold(level[k]);
    } else {
#pragma omp parallel for schedule(dynamic, 8)
      for (std::ptrdiff_t k = 0; k < m; ++k) fold(level[k]);
    }
  }

  ComparisonReport report;
  report.mode = mode;
  report.policy_a_name = a.name;
  report.policy_b_name = b.name;
  report.paragraph_scores.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    report.paragraph_scores.push_back({pairs[i].path, own[i], aggregate[i], combined[i],
                                       pairs[i].in_a ? pairs[i].in_a->weight : 1u,
                                       status_of(pairs[i])});
    add_diagnostics(pairs[i], report.diagnostics);
  }

  double weighted = 0.0;
  double weights = 0.0;
  double plain = 0.0;
  std::size_t count = 0;
  for (const auto* s : report.top_level()) {
    weighted += s->combined_score * s->weight;
    weights += s->weight;
    plain += s->combined_score;
    ++count;
  }
  // Two empty policies are vacuously compatible.
  report.overall_weighted = count ? weighted / weights : 100.0;
  report.overall_unweighted = count ? plain / static_cast<double>(count) : 100.0;
  return report;
}

}  // namespace cpcompat

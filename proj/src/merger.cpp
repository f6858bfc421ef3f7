#include "cpcompat/merger.hpp"

#include <algorithm>

#include "cpcompat/scoring.hpp"

namespace cpcompat {

namespace {

std::string unmatched_note(char side, const PolicyOption& o) {
  return std::string(kUnmatchedMarker) + " from " + side + ": " + o.phrase;
}

PolicyOption unlabeled(const PolicyOption& o) {
  PolicyOption out = o;
  out.label.reset();
  return out;
}

/// Copies a subtree present on one side only, annotating every option.
Paragraph one_sided(const Paragraph& p, char side) {
  Paragraph out;
  out.path = p.path;
  out.title = p.title;
  out.weight = side == 'A' ? p.weight : 1;
  out.connective = p.connective;
  out.comments = p.comments;
  out.comments.push_back(std::string(kUnmatchedMarker) + " paragraph only in " + side);
  for (const auto& o : p.options) {
    out.options.push_back(unlabeled(o));
    out.comments.push_back(unmatched_note(side, o));
  }
  for (const auto& c : p.children) out.children.push_back(one_sided(c, side));
  return out;
}

std::vector<Paragraph> merge_children(const std::vector<Paragraph>& a,
                                      const std::vector<Paragraph>& b);

Paragraph merge_pair(const Paragraph& pa, const Paragraph& pb) {
  Paragraph out;
  out.path = pa.path;
  out.title = pa.title;
  out.weight = pa.weight;
  out.comments = pa.comments;
  for (const auto& c : pb.comments) {
    if (std::find(out.comments.begin(), out.comments.end(), c) == out.comments.end()) {
      out.comments.push_back(c);
    }
  }
  if (normalize_phrase(pa.title) != normalize_phrase(pb.title)) {
    out.comments.push_back(std::string(kConflictMarker) + " title in B is '" + pb.title + "'");
  }

  const auto matches = match_options(pa.options, pb.options);
  std::vector<bool> b_matched(pb.options.size(), false);
  auto match_it = matches.begin();
  for (std::size_t j = 0; j < pa.options.size(); ++j) {
    auto option = unlabeled(pa.options[j]);
    if (match_it != matches.end() && match_it->option_index_a == j) {
      const auto& other = pb.options[match_it->option_index_b];
      b_matched[match_it->option_index_b] = true;
      if (keyword_value(other.keyword) > keyword_value(option.keyword)) option.keyword = other.keyword;
      ++match_it;
    } else {
      out.comments.push_back(unmatched_note('A', option));
    }
    out.options.push_back(std::move(option));
  }
  for (std::size_t k = 0; k < pb.options.size(); ++k) {
    if (b_matched[k]) continue;
    out.options.push_back(unlabeled(pb.options[k]));
    out.comments.push_back(unmatched_note('B', pb.options[k]));
  }

  out.connective = pa.connective != Connective::kNone ? pa.connective : pb.connective;
  if (pa.connective != Connective::kNone && pb.connective != Connective::kNone &&
      pa.connective != pb.connective) {
    out.comments.push_back(std::string(kConflictMarker) + " connective in B is " +
                           std::string(connective_name(pb.connective)));
  }

  out.children = merge_children(pa.children, pb.children);
  return out;
}

std::vector<Paragraph> merge_children(const std::vector<Paragraph>& a,
                                      const std::vector<Paragraph>& b) {
  std::vector<Paragraph> out;
  out.reserve(std::max(a.size(), b.size()));
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->path.last() < ib->path.last())) {
      out.push_back(one_sided(*ia++, 'A'));
    } else if (ia == a.end() || ib->path.last() < ia->path.last()) {
      out.push_back(one_sided(*ib++, 'B'));
    } else {
      out.push_back(merge_pair(*ia++, *ib++));
    }
  }
  return out;
}

void strip(std::vector<Paragraph>& nodes) {
  for (auto& p : nodes) {
    std::erase_if(p.comments, [](const std::string& c) {
      return c.starts_with(kUnmatchedMarker) || c.starts_with(kConflictMarker);
    });
    strip(p.children);
  }
}

}  // namespace

Policy merge(const Policy& a, const Policy& b, const ComparisonReport& report,
             const Verdict& verdict, ComparisonMode mode) {
  if (!verdict.accepted) throw RejectedInputError();
  if (report.mode != mode) {
    throw std::invalid_argument("merge: report was computed in " +
                                std::string(mode_name(report.mode)) + " mode");
  }
  if (mode == ComparisonMode::kAcquire) return a;

  Policy out;
  out.name = a.name + "+" + b.name;
  out.roots = merge_children(a.roots, b.roots);
  return out;
}

Policy strip_annotations(Policy p) {
  strip(p.roots);
  return p;
}

}  // namespace cpcompat

#include "cpcompat/model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace cpcompat {

NumberPath::NumberPath(std::vector<std::uint32_t> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) throw std::invalid_argument("NumberPath: empty path");
  for (auto s : segments_) {
    if (s == 0) throw std::invalid_argument("NumberPath: segment must be >= 1");
  }
}

std::optional<NumberPath> NumberPath::from_string(std::string_view text) {
  if (!text.empty() && text.back() == '.') text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  std::vector<std::uint32_t> segments;
  std::size_t pos = 0;
  while (true) {
    auto dot = text.find('.', pos);
    auto piece = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
    if (piece.empty()) return std::nullopt;
    std::uint32_t value = 0;
    auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || end != piece.data() + piece.size() || value == 0) return std::nullopt;
    segments.push_back(value);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return NumberPath(std::move(segments));
}

std::optional<NumberPath> NumberPath::parent() const {
  if (segments_.size() == 1) return std::nullopt;
  return NumberPath({segments_.begin(), segments_.end() - 1});
}

NumberPath NumberPath::child(std::uint32_t segment) const {
  auto s = segments_;
  s.push_back(segment);
  return NumberPath(std::move(s));
}

bool NumberPath::is_parent_of(const NumberPath& other) const {
  return other.segments_.size() == segments_.size() + 1 &&
         std::equal(segments_.begin(), segments_.end(), other.segments_.begin());
}

std::string NumberPath::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(segments_[i]);
  }
  return out;
}

std::string_view keyword_name(Keyword k) {
  switch (k) {
    case Keyword::kMust:
      return "MUST";
    case Keyword::kRecommended:
      return "RECOMMENDED";
    case Keyword::kOptional:
      return "OPTIONAL";
    case Keyword::kNot:
      return "NOT";
  }
  return "MUST";
}

std::optional<Keyword> keyword_from_token(std::string_view token) {
  for (auto k : kAllKeywords) {
    if (keyword_name(k) == token) return k;
  }
  return std::nullopt;
}

std::string normalize_phrase(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (unsigned char c : s) {
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += static_cast<char>(std::tolower(c));
  }
  return out;
}

PolicyOption::PolicyOption(std::optional<char> label, std::optional<Keyword> keyword,
                           std::string phrase)
    : label(label),
      keyword(keyword),
      phrase(std::move(phrase)),
      normalized_phrase(normalize_phrase(this->phrase)) {}

std::string_view connective_name(Connective c) {
  switch (c) {
    case Connective::kAnd:
      return "AND";
    case Connective::kOr:
      return "OR";
    case Connective::kNone:
      return "NONE";
  }
  return "NONE";
}

namespace {

const Paragraph* find_in(const std::vector<Paragraph>& nodes, const NumberPath& path) {
  for (const auto& p : nodes) {
    if (p.path == path) return &p;
    if (p.path.depth() < path.depth() &&
        std::equal(p.path.segments().begin(), p.path.segments().end(),
                   path.segments().begin())) {
      return find_in(p.children, path);
    }
  }
  return nullptr;
}

std::optional<std::string> check_siblings(const std::vector<Paragraph>& nodes,
                                          const std::optional<NumberPath>& parent) {
  const Paragraph* prev = nullptr;
  for (const auto& p : nodes) {
    const auto where = p.path.to_string();
    if (parent ? !parent->is_parent_of(p.path) : p.path.depth() != 1) {
      return "paragraph " + where + " does not extend its parent by one segment";
    }
    if (prev && prev->path.last() >= p.path.last()) {
      return "paragraph " + where + " is not strictly after its previous sibling";
    }
    if (p.weight < 1) return "paragraph " + where + " has weight 0";
    std::set<char> labels;
    for (const auto& o : p.options) {
      if (o.label && !labels.insert(*o.label).second) {
        return "paragraph " + where + " repeats option label " + std::string(1, *o.label);
      }
      if (o.phrase.find('\n') != std::string::npos) {
        return "paragraph " + where + " has an option phrase with a line break";
      }
    }
    if (auto err = check_siblings(p.children, p.path)) return err;
    prev = &p;
  }
  return std::nullopt;
}

bool same_options(const std::vector<PolicyOption>& a, const std::vector<PolicyOption>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
    return x.keyword == y.keyword && x.phrase == y.phrase;
  });
}

}  // namespace

const Paragraph* Policy::find(const NumberPath& path) const { return find_in(roots, path); }

std::optional<std::string> check_invariants(const Policy& policy) {
  return check_siblings(policy.roots, std::nullopt);
}

bool same_structure(const Paragraph& a, const Paragraph& b) {
  return a.path == b.path && a.title == b.title && a.weight == b.weight &&
         a.connective == b.connective && a.comments == b.comments &&
         same_options(a.options, b.options) &&
         std::equal(a.children.begin(), a.children.end(), b.children.begin(), b.children.end(),
                    [](const auto& x, const auto& y) { return same_structure(x, y); });
}

bool same_structure(const Policy& a, const Policy& b) {
  return std::equal(a.roots.begin(), a.roots.end(), b.roots.begin(), b.roots.end(),
                    [](const auto& x, const auto& y) { return same_structure(x, y); });
}

std::string_view mode_name(ComparisonMode m) {
  return m == ComparisonMode::kMerge ? "merge" : "acquire";
}

std::optional<ComparisonMode> mode_from_string(std::string_view s) {
  if (s == "merge") return ComparisonMode::kMerge;
  if (s == "acquire") return ComparisonMode::kAcquire;
  return std::nullopt;
}

std::string_view match_status_name(MatchStatus s) {
  switch (s) {
    case MatchStatus::kMatched:
      return "MATCHED";
    case MatchStatus::kMissingInA:
      return "MISSING_IN_A";
    case MatchStatus::kMissingInB:
      return "MISSING_IN_B";
    case MatchStatus::kBothEmpty:
      return "BOTH_EMPTY";
  }
  return "MATCHED";
}

const ParagraphScore* ComparisonReport::find(const NumberPath& path) const {
  auto it = std::find_if(paragraph_scores.begin(), paragraph_scores.end(),
                         [&](const auto& s) { return s.path == path; });
  return it == paragraph_scores.end() ? nullptr : &*it;
}

std::vector<const ParagraphScore*> ComparisonReport::top_level() const {
  std::vector<const ParagraphScore*> out;
  for (const auto& s : paragraph_scores) {
    if (s.path.depth() == 1) out.push_back(&s);
  }
  return out;
}

}  // namespace cpcompat

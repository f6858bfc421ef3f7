#pragma once

// Seeded random generators for property tests.

#include <algorithm>
#include <cctype>
#include <random>
#include <string>
#include <vector>

#include "cpcompat/model.hpp"

namespace cpcompat::testing {

using Rng = std::mt19937_64;

inline constexpr const char* kWords[] = {"issue",  "revoke",  "root",    "audit",   "key",
                                         "holder", "archive", "records", "subject", "name",
                                         "escrow", "renewal", "policy",  "signing", "offline"};

inline std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline std::string random_words(Rng& rng, std::size_t max_words) {
  std::string out;
  const auto n = 1 + pick(rng, max_words);
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ' ';
    out += kWords[pick(rng, std::size(kWords))];
  }
  return out;
}

inline std::optional<Keyword> random_keyword(Rng& rng, bool allow_absent = true) {
  if (allow_absent && coin(rng, 0.2)) return std::nullopt;
  return kAllKeywords[pick(rng, 4)];
}

/// Options with phrases from a small alphabet so that matches are common.
inline std::vector<PolicyOption> random_options(Rng& rng, std::size_t max_count,
                                                std::size_t alphabet = 4,
                                                bool allow_absent_keyword = true) {
  std::vector<PolicyOption> out;
  const auto n = pick(rng, max_count + 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::string phrase(1, static_cast<char>('a' + pick(rng, alphabet)));
    if (coin(rng, 0.3)) phrase = "Term " + phrase;
    out.emplace_back(std::nullopt, random_keyword(rng, allow_absent_keyword), phrase);
  }
  return out;
}

inline Connective random_connective(Rng& rng) {
  const Connective all[] = {Connective::kNone, Connective::kAnd, Connective::kOr};
  return all[pick(rng, 3)];
}

inline Paragraph random_paragraph(Rng& rng, const NumberPath& path, std::size_t max_depth) {
  Paragraph p;
  p.path = path;
  p.title = random_words(rng, 3);
  if (path.depth() == 1) {
    for (auto& c : p.title) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  p.weight = coin(rng, 0.3) ? static_cast<std::uint32_t>(1 + pick(rng, 5)) : 1;
  if (coin(rng, 0.3)) p.comments.push_back(" " + random_words(rng, 4));
  const auto n_options = pick(rng, 5);
  std::vector<char> labels;
  for (char c = 'a'; c <= 'z'; ++c) labels.push_back(c);
  std::shuffle(labels.begin(), labels.end(), rng);
  for (std::size_t i = 0; i < n_options; ++i) {
    std::optional<char> label;
    if (coin(rng, 0.7)) label = labels[i];
    p.options.emplace_back(label, random_keyword(rng), random_words(rng, 4));
  }
  p.connective = random_connective(rng);
  if (path.depth() < max_depth) {
    std::uint32_t seg = 0;
    const auto n_children = pick(rng, 4);
    for (std::size_t i = 0; i < n_children; ++i) {
      seg += 1 + static_cast<std::uint32_t>(coin(rng, 0.2));
      p.children.push_back(random_paragraph(rng, path.child(seg), max_depth));
    }
  }
  return p;
}

inline Policy random_policy(Rng& rng, std::size_t max_roots = 4, std::size_t max_depth = 5) {
  Policy p;
  p.name = "generated";
  const auto n = pick(rng, max_roots + 1);
  for (std::uint32_t i = 1; i <= n; ++i) {
    p.roots.push_back(random_paragraph(rng, NumberPath({i}), max_depth));
  }
  return p;
}

}  // namespace cpcompat::testing

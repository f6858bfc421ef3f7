#pragma once

// Brute-force scoring oracle for test use only. It works from plain
// (phrase, keyword value) pairs and pairs the r-th occurrence of a phrase in
// A with the r-th occurrence of the same phrase in B, which is what greedy
// earliest-unconsumed matching produces. Shares no code with the library.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace cpcompat::testing {

struct OracleOption {
  std::string phrase;  // already normalized
  double value = 1.0;
};

enum class OracleConnective { kAnd, kOr };
enum class OracleMode { kMerge, kAcquire };

inline double oracle_paragraph_score(const std::vector<OracleOption>& a,
                                     const std::vector<OracleOption>& b,
                                     OracleConnective connective, OracleMode mode) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  if (na == 0 && nb == 0) return 100.0;
  if (na == 0 || nb == 0) return mode == OracleMode::kMerge ? 0.0 : 100.0;

  // O_jk for every (j, k).
  std::vector<std::vector<double>> o(na, std::vector<double>(nb, 0.0));
  for (std::size_t j = 0; j < na; ++j) {
    for (std::size_t k = 0; k < nb; ++k) {
      o[j][k] = a[j].phrase == b[k].phrase ? 100.0 : 0.0;
    }
  }

  std::vector<double> terms;
  for (std::size_t j = 0; j < na; ++j) {
    std::size_t rank = 0;
    for (std::size_t i = 0; i < j; ++i) rank += a[i].phrase == a[j].phrase ? 1 : 0;
    std::size_t seen = 0;
    for (std::size_t k = 0; k < nb; ++k) {
      if (o[j][k] != 100.0) continue;
      if (seen++ == rank) {
        terms.push_back(o[j][k] * (1.0 - std::fabs(a[j].value - b[k].value)));
        break;
      }
    }
  }

  if (connective == OracleConnective::kOr) {
    double best = 0.0;
    for (double t : terms) best = t > best ? t : best;
    return best;
  }
  double sum = 0.0;
  for (double t : terms) sum += t;
  const double denominator =
      mode == OracleMode::kMerge ? static_cast<double>(na > nb ? na : nb) : static_cast<double>(na);
  return sum / denominator;
}

}  // namespace cpcompat::testing

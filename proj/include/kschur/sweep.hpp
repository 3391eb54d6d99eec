#pragma once

// Canonical instance ranges for the verification sweeps.

#include <vector>

#include "kschur/shapes.hpp"

namespace kschur {

/// Straight shapes with 1 <= |lambda| <= max_weight, plus every lambda/mu
/// with mu inside lambda (mu = empty and mu = lambda included) when `skew`.
/// Ordered by |lambda|, then lambda decreasing, then mu by weight.
inline std::vector<SkewShape> shapes_in_range(int max_weight, bool skew) {
  std::vector<SkewShape> out;
  for (const auto& lambda : strict_partitions_up_to(max_weight)) {
    if (lambda.empty()) continue;
    if (!skew) {
      out.emplace_back(lambda);
      continue;
    }
    for (const auto& mu : subpartitions(lambda)) out.emplace_back(lambda, mu);
  }
  return out;
}

/// Pairs (lambda, mu) with mu nonempty and inside lambda, |lambda| <= max_weight.
inline std::vector<SkewShape> nonempty_inner_pairs(int max_weight) {
  std::vector<SkewShape> out;
  for (const auto& s : shapes_in_range(max_weight, true))
    if (!s.inner().empty()) out.push_back(s);
  return out;
}

}  // namespace kschur

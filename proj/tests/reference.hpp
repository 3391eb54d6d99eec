#pragma once

// Brute-force reference model used by the tests.  Written against the
// definitions directly and sharing no code with the library: symbols are
// (letter, primed) pairs, shapes are explicit coordinate lists, cells are
// sorted symbol vectors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ref {

struct Sym {
  int letter = 1;
  bool primed = false;

  // Twice the numeric value: k' = k - 1/2.
  int twice() const { return 2 * letter - (primed ? 1 : 0); }
  friend bool operator<(const Sym& a, const Sym& b) { return a.twice() < b.twice(); }
  friend bool operator==(const Sym& a, const Sym& b) { return a.twice() == b.twice(); }
};

using Coord = std::pair<int, int>;  // (row, column), 1-based
using Cell = std::vector<Sym>;      // sorted, nonempty
using Tableau = std::map<Coord, Cell>;

inline int part(const std::vector<int>& p, int i) {
  return i >= 1 && i <= static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i - 1)] : 0;
}

/// Row i of the shifted diagram occupies columns i .. i + lambda_i - 1;
/// the skew diagram drops the first mu_i of them.
inline std::vector<Coord> boxes(const std::vector<int>& lambda, const std::vector<int>& mu = {}) {
  std::vector<Coord> out;
  for (int i = 1; i <= static_cast<int>(lambda.size()); ++i)
    for (int j = i; j <= i + part(lambda, i) - 1; ++j)
      if (j > i + part(mu, i) - 1) out.emplace_back(i, j);
  return out;
}

inline bool is_strict(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i + 1 < p.size() && p[i] <= p[i + 1]) return false;
  }
  return true;
}

inline std::vector<Sym> alphabet(int n) {
  std::vector<Sym> a;
  for (int k = 1; k <= n; ++k) {
    a.push_back(Sym{k, true});
    a.push_back(Sym{k, false});
  }
  return a;
}

/// Set-valued (or single-valued) shifted tableau conditions, family 'P' or 'Q'.
inline bool valid(const Tableau& t, char family) {
  for (const auto& [c, cell] : t) {
    if (cell.empty()) return false;
    auto right = t.find({c.first, c.second + 1});
    if (right != t.end() && right->second.front() < cell.back()) return false;
    auto down = t.find({c.first + 1, c.second});
    if (down != t.end() && down->second.front() < cell.back()) return false;
    if (family == 'P' && c.first == c.second)
      for (const Sym& s : cell)
        if (s.primed) return false;
  }
  std::map<std::pair<int, int>, int> column_unprimed, row_primed;
  for (const auto& [c, cell] : t) {
    for (const Sym& s : cell) {
      if (s.primed) {
        if (++row_primed[{c.first, s.letter}] > 1) return false;
      } else {
        if (++column_unprimed[{c.second, s.letter}] > 1) return false;
      }
    }
  }
  return true;
}

/// All tableaux of the shape by exhaustive assignment.
inline std::vector<Tableau> all_tableaux(const std::vector<Coord>& shape, int n, char family, bool set_valued) {
  const auto alpha = alphabet(n);
  std::vector<Cell> choices;
  for (std::uint32_t m = 1; m < (1u << alpha.size()); ++m) {
    Cell c;
    for (std::size_t k = 0; k < alpha.size(); ++k)
      if (m & (1u << k)) c.push_back(alpha[k]);
    if (!set_valued && c.size() != 1) continue;
    std::sort(c.begin(), c.end());
    choices.push_back(c);
  }
  std::vector<Tableau> out;
  Tableau t;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == shape.size()) {
      if (valid(t, family)) out.push_back(t);
      return;
    }
    for (const auto& c : choices) {
      t[shape[k]] = c;
      rec(k + 1);
    }
    t.erase(shape[k]);
  };
  rec(0);
  return out;
}

inline int size(const Tableau& t) {
  int s = 0;
  for (const auto& [c, cell] : t) s += static_cast<int>(cell.size());
  return s;
}

/// Polynomial as (b exponent, x exponents) -> coefficient.
using Poly = std::map<std::pair<int, std::vector<int>>, long>;

inline Poly generating(const std::vector<Tableau>& ts, int n, int boxes) {
  Poly p;
  for (const auto& t : ts) {
    std::vector<int> x(static_cast<std::size_t>(n), 0);
    for (const auto& [c, cell] : t)
      for (const Sym& s : cell) ++x[static_cast<std::size_t>(s.letter - 1)];
    ++p[{size(t) - boxes, x}];
  }
  return p;
}

/// Tableaux whose total of entry values is least.
inline std::vector<Tableau> least_sum(const std::vector<Tableau>& single) {
  std::vector<Tableau> best;
  int best_sum = 0;
  for (const auto& t : single) {
    int s = 0;
    for (const auto& [c, cell] : t) s += cell.front().twice();
    if (best.empty() || s < best_sum) {
      best = {t};
      best_sum = s;
    } else if (s == best_sum) {
      best.push_back(t);
    }
  }
  return best;
}

/// Boxes whose deletion keeps the partition strict, by trying every row.
inline std::vector<Coord> removable(const std::vector<int>& mu) {
  std::vector<Coord> out;
  for (int i = 1; i <= static_cast<int>(mu.size()); ++i) {
    std::vector<int> q = mu;
    --q[static_cast<std::size_t>(i - 1)];
    if (q.back() == 0) q.pop_back();
    if (is_strict(q)) out.emplace_back(i, i + mu[static_cast<std::size_t>(i - 1)] - 1);
  }
  return out;
}

}  // namespace ref

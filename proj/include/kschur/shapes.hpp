#pragma once

// Strict partitions, shifted (skew) Young diagrams and removable boxes.
//
// Coordinates follow the matrix convention: row i grows downward, column j
// grows to the right, both 1-based.  Row i of a shifted diagram starts at
// column i.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kschur {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A strictly decreasing sequence of positive integers.  Trailing zeros are
/// accepted on construction and dropped, so every value has one canonical
/// representation.
class StrictPartition {
 public:
  StrictPartition() = default;

  explicit StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw Error("strict partition parts must be positive");
      if (i + 1 < parts_.size() && parts_[i] <= parts_[i + 1])
        throw Error("strict partition parts must be strictly decreasing");
    }
  }

  StrictPartition(std::initializer_list<int> parts)
      : StrictPartition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  int weight() const noexcept {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
  }

  /// 1-based part access; rows past the length read as zero.
  int part(int i) const noexcept {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  std::string to_string() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
  friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;

 private:
  std::vector<int> parts_;
};

/// Parses "4,2,1".  The empty partition is written "" or "0".
inline StrictPartition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw Error("malformed partition text");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw Error("malformed partition text: '" + token + "'");
    }
    if (used != token.size()) throw Error("malformed partition text: '" + token + "'");
    parts.push_back(value);
    token.clear();
  };
  std::string_view trimmed = text;
  while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
  while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
  if (trimmed.empty()) return {};
  for (char c : trimmed) {
    if (c == ',') {
      flush();
    } else if (c != ' ') {
      token += c;
    }
  }
  flush();
  if (parts.size() == 1 && parts[0] == 0) return {};
  return StrictPartition(std::move(parts));
}

/// mu is contained in lambda row by row (mu padded with zeros).
inline bool is_subpartition(const StrictPartition& mu, const StrictPartition& lambda) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > lambda.part(i)) return false;
  return true;
}

struct Box {
  int row = 1;
  int col = 1;

  bool diagonal() const noexcept { return row == col; }

  // Row-major; use column_major_less for the box order of the involutions.
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// (i,j) precedes (i',j') iff j < j', or j == j' and i < i'.
inline bool column_major_less(const Box& a, const Box& b) noexcept {
  return a.col != b.col ? a.col < b.col : a.row < b.row;
}

inline std::string to_string(const Box& b) {
  return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

/// The shifted skew diagram lambda/mu.  mu empty gives the straight shape.
class SkewShape {
 public:
  SkewShape() = default;

  explicit SkewShape(StrictPartition outer, StrictPartition inner = {})
      : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!is_subpartition(inner_, outer_))
      throw Error("inner partition " + inner_.to_string() + " is not contained in " +
                  outer_.to_string());
    for (int i = 1; i <= outer_.length(); ++i)
      for (int j = row_begin(i); j <= row_end(i); ++j) boxes_.push_back(Box{i, j});
  }

  const StrictPartition& outer() const noexcept { return outer_; }
  const StrictPartition& inner() const noexcept { return inner_; }
  bool straight() const noexcept { return inner_.empty(); }

  int rows() const noexcept { return outer_.length(); }
  /// First and last column of row i (row_begin > row_end means the row is empty).
  int row_begin(int i) const noexcept { return inner_.part(i) + i; }
  int row_end(int i) const noexcept { return outer_.part(i) + i - 1; }

  std::size_t size() const noexcept { return boxes_.size(); }
  bool empty() const noexcept { return boxes_.empty(); }

  bool contains(const Box& b) const noexcept {
    return b.row >= 1 && b.row <= rows() && b.col >= row_begin(b.row) &&
           b.col <= row_end(b.row);
  }

  /// Boxes in row-major order; this is also the index order of fillings.
  const std::vector<Box>& boxes() const noexcept { return boxes_; }

  std::optional<std::size_t> index_of(const Box& b) const noexcept {
    if (!contains(b)) return std::nullopt;
    std::size_t idx = 0;
    for (int i = 1; i < b.row; ++i) idx += static_cast<std::size_t>(
        std::max(0, row_end(i) - row_begin(i) + 1));
    return idx + static_cast<std::size_t>(b.col - row_begin(b.row));
  }

  std::string to_string() const {
    if (inner_.empty()) return outer_.to_string();
    return outer_.to_string() + "/" + inner_.to_string();
  }

  friend bool operator==(const SkewShape& a, const SkewShape& b) {
    return a.outer_ == b.outer_ && a.inner_ == b.inner_;
  }

 private:
  StrictPartition outer_;
  StrictPartition inner_;
  std::vector<Box> boxes_;
};

/// "6,4,3,1/4,2" or "4,2,1".
inline SkewShape parse_shape(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return SkewShape(parse_partition(text));
  return SkewShape(parse_partition(text.substr(0, slash)),
                   parse_partition(text.substr(slash + 1)));
}

inline std::vector<Box> boxes_in_order(const SkewShape& shape) {
  std::vector<Box> out = shape.boxes();
  std::sort(out.begin(), out.end(), column_major_less);
  return out;
}

/// Removable boxes of a nonempty strict partition, one per qualifying row,
/// listed top to bottom.
struct RemovableBoxSet {
  StrictPartition base;
  std::vector<Box> boxes;

  std::size_t size() const noexcept { return boxes.size(); }
  bool contains(const Box& b) const noexcept {
    return std::find(boxes.begin(), boxes.end(), b) != boxes.end();
  }
  /// The removable box in the last row of the base partition.
  const Box& last_row_box() const { return boxes.back(); }
};

inline RemovableBoxSet removable_boxes(const StrictPartition& mu) {
  if (mu.empty()) throw Error("no removable boxes of the empty partition");
  RemovableBoxSet out{mu, {}};
  for (int i = 1; i <= mu.length(); ++i) {
    // Row i may lose a box iff mu_i - 1 > mu_{i+1}; the last row always can.
    if (i == mu.length() || mu.part(i) - 1 > mu.part(i + 1))
      out.boxes.push_back(Box{i, mu.part(i) + i - 1});
  }
  return out;
}

/// Deletes every box of `chosen` from mu at once.
inline StrictPartition remove_subset(const StrictPartition& mu, std::span<const Box> chosen) {
  if (chosen.empty()) return mu;
  auto rem = removable_boxes(mu);
  std::vector<int> parts = mu.parts();
  std::vector<bool> hit(parts.size(), false);
  for (const Box& b : chosen) {
    if (!rem.contains(b)) throw Error("box " + to_string(b) + " is not removable from " + mu.to_string());
    auto r = static_cast<std::size_t>(b.row - 1);
    if (hit[r]) throw Error("box " + to_string(b) + " listed twice");
    hit[r] = true;
    --parts[r];
  }
  return StrictPartition(std::move(parts));
}

/// Every strict partition of `weight`, in decreasing lexicographic order.
inline std::vector<StrictPartition> strict_partitions_of(int weight) {
  std::vector<StrictPartition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p - 1);
      cur.pop_back();
    }
  };
  rec(rec, weight, weight);
  return out;
}

/// Strict partitions of weight 0..max_weight, by weight then as above.
inline std::vector<StrictPartition> strict_partitions_up_to(int max_weight) {
  std::vector<StrictPartition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto level = strict_partitions_of(w);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// Every strict mu contained in lambda, including the empty partition and lambda.
inline std::vector<StrictPartition> subpartitions(const StrictPartition& lambda) {
  std::vector<StrictPartition> out;
  for (const auto& mu : strict_partitions_up_to(lambda.weight()))
    if (is_subpartition(mu, lambda)) out.push_back(mu);
  return out;
}

}  // namespace kschur

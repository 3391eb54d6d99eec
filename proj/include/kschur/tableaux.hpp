#pragma once

// The primed alphabet 1' < 1 < 2' < 2 < ... < n' < n, cell sets, fillings of
// shifted skew shapes, and the validity rules for shifted (set-valued)
// semistandard tableaux.

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kschur/polyring.hpp"
#include "kschur/shapes.hpp"

namespace kschur {

/// Largest supported alphabet bound n; codes 1..2n must fit in a 32-bit mask.
inline constexpr int kMaxLetters = 15;

enum class Family { P, Q };

inline const char* to_string(Family f) noexcept { return f == Family::P ? "P" : "Q"; }

inline Family parse_family(std::string_view s) {
  if (s == "P") return Family::P;
  if (s == "Q") return Family::Q;
  throw Error("unknown tableau family '" + std::string(s) + "'");
}

/// Letter k is code 2k, k' is code 2k-1, so the code order is the alphabet
/// order and the numeric value of a code c is exactly c/2.
class Entry {
 public:
  constexpr Entry() = default;
  constexpr explicit Entry(int code) : code_(code) {}

  static constexpr Entry unprimed(int k) { return Entry(2 * k); }
  static constexpr Entry primed(int k) { return Entry(2 * k - 1); }

  constexpr int code() const noexcept { return code_; }
  constexpr int letter() const noexcept { return (code_ + 1) / 2; }
  constexpr bool is_primed() const noexcept { return code_ % 2 == 1; }
  /// Twice the numeric value (k' = k - 1/2).
  constexpr int twice_value() const noexcept { return code_; }

  std::string to_string() const {
    return std::to_string(letter()) + (is_primed() ? "'" : "");
  }

  friend constexpr auto operator<=>(const Entry&, const Entry&) = default;

 private:
  int code_ = 0;
};

inline Entry parse_entry(std::string_view s) {
  bool primed = !s.empty() && s.back() == '\'';
  if (primed) s.remove_suffix(1);
  if (s.empty()) throw Error("empty tableau entry");
  int k = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw Error("malformed tableau entry '" + std::string(s) + "'");
    k = k * 10 + (c - '0');
    if (k > kMaxLetters) throw Error("tableau entry exceeds the supported alphabet");
  }
  if (k < 1) throw Error("tableau letters start at 1");
  return primed ? Entry::primed(k) : Entry::unprimed(k);
}

/// A set of entries held as a bitmask over codes.  A default-constructed
/// CellSet is empty, which is only meaningful as a work value; cells of a
/// filling are nonempty.
class CellSet {
 public:
  constexpr CellSet() = default;
  constexpr explicit CellSet(std::uint32_t mask) : mask_(mask) {}
  CellSet(std::initializer_list<Entry> entries) {
    for (Entry e : entries) mask_ |= bit(e.code());
  }

  static constexpr std::uint32_t bit(int code) noexcept { return std::uint32_t{1} << code; }

  constexpr std::uint32_t mask() const noexcept { return mask_; }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr int size() const noexcept { return std::popcount(mask_); }
  constexpr bool contains(Entry e) const noexcept { return (mask_ & bit(e.code())) != 0; }
  constexpr Entry min() const noexcept { return Entry(std::countr_zero(mask_)); }
  constexpr Entry max() const noexcept { return Entry(31 - std::countl_zero(mask_)); }
  constexpr bool has_primed() const noexcept { return (mask_ & 0xAAAAAAAAu) != 0; }

  constexpr CellSet with(Entry e) const noexcept { return CellSet(mask_ | bit(e.code())); }
  constexpr CellSet without(Entry e) const noexcept { return CellSet(mask_ & ~bit(e.code())); }

  std::vector<Entry> entries() const {
    std::vector<Entry> out;
    for (std::uint32_t m = mask_; m; m &= m - 1) out.emplace_back(std::countr_zero(m));
    return out;
  }

  friend constexpr bool operator==(CellSet, CellSet) = default;

 private:
  std::uint32_t mask_ = 0;
};

struct Weight {
  std::vector<int> counts;

  int total() const noexcept {
    int t = 0;
    for (int c : counts) t += c;
    return t;
  }
  friend bool operator==(const Weight&, const Weight&) = default;
};

/// An assignment of cell sets to the boxes of a shape.  Cells are stored in
/// the shape's row-major box order.
class Filling {
 public:
  Filling() = default;

  Filling(std::shared_ptr<const SkewShape> shape, int n, Family family)
      : shape_(std::move(shape)), n_(n), family_(family), cells_(shape_->size()) {
    if (n < 0 || n > kMaxLetters) throw Error("alphabet bound out of range");
  }

  Filling(std::shared_ptr<const SkewShape> shape, int n, Family family, std::vector<CellSet> cells)
      : Filling(std::move(shape), n, family) {
    if (cells.size() != cells_.size()) throw Error("filling does not cover the shape");
    cells_ = std::move(cells);
  }

  const SkewShape& shape() const noexcept { return *shape_; }
  const std::shared_ptr<const SkewShape>& shape_ptr() const noexcept { return shape_; }
  int n() const noexcept { return n_; }
  Family family() const noexcept { return family_; }

  std::size_t box_count() const noexcept { return cells_.size(); }
  const std::vector<CellSet>& cells() const noexcept { return cells_; }
  CellSet cell(std::size_t idx) const { return cells_[idx]; }
  void set_cell(std::size_t idx, CellSet c) { cells_[idx] = c; }

  CellSet at(const Box& b) const {
    auto idx = shape_->index_of(b);
    if (!idx) throw Error("box " + to_string(b) + " is outside the shape");
    return cells_[*idx];
  }
  void set(const Box& b, CellSet c) {
    auto idx = shape_->index_of(b);
    if (!idx) throw Error("box " + to_string(b) + " is outside the shape");
    cells_[*idx] = c;
  }

  /// Total number of entries |T|.
  int size() const noexcept {
    int s = 0;
    for (CellSet c : cells_) s += c.size();
    return s;
  }

  bool single_valued() const noexcept {
    for (CellSet c : cells_)
      if (c.size() != 1) return false;
    return true;
  }

  /// Same shape, alphabet, family and cells.
  friend bool operator==(const Filling& a, const Filling& b) {
    return a.n_ == b.n_ && a.family_ == b.family_ && a.cells_ == b.cells_ &&
           (a.shape_ == b.shape_ || *a.shape_ == *b.shape_);
  }

  /// Lexicographic on the row-major cell masks; the canonical enumeration
  /// order differs, this is only for sorting and set membership.
  friend bool cells_less(const Filling& a, const Filling& b) {
    return std::lexicographical_compare(
        a.cells_.begin(), a.cells_.end(), b.cells_.begin(), b.cells_.end(),
        [](CellSet x, CellSet y) { return x.mask() < y.mask(); });
  }

 private:
  std::shared_ptr<const SkewShape> shape_;
  int n_ = 0;
  Family family_ = Family::P;
  std::vector<CellSet> cells_;
};

enum class Rule {
  none,
  structure,       // empty cell or entry outside the alphabet
  order,           // max of a box exceeds min of its right or lower neighbour
  column_unprimed, // an unprimed letter twice in one column
  row_primed,      // a primed letter twice in one row
  diagonal_primed, // family P: primed entry on the main diagonal
};

inline const char* to_string(Rule r) noexcept {
  switch (r) {
    case Rule::none: return "none";
    case Rule::structure: return "structure";
    case Rule::order: return "order";
    case Rule::column_unprimed: return "column-unprimed";
    case Rule::row_primed: return "row-primed";
    case Rule::diagonal_primed: return "diagonal-primed";
  }
  return "?";
}

struct Validation {
  bool ok = true;
  Rule rule = Rule::none;
  Box where{};
  std::string message;

  explicit operator bool() const noexcept { return ok; }
};

namespace detail {
inline Validation violation(Rule r, const Box& b, std::string msg) {
  return Validation{false, r, b, std::move(msg)};
}
}  // namespace detail

/// Checks a filling against the set-valued tableau rules.  Violations are
/// reported in rule order (structure, order, column, row, diagonal), the first
/// offending box in row-major order within a rule.
inline Validation validate(const Filling& f) {
  const SkewShape& shape = f.shape();
  const auto& boxes = shape.boxes();
  const std::uint32_t alphabet = f.n() == 0 ? 0u : ((std::uint32_t{1} << (2 * f.n() + 1)) - 2u);

  for (std::size_t k = 0; k < boxes.size(); ++k) {
    CellSet c = f.cell(k);
    if (c.empty()) return detail::violation(Rule::structure, boxes[k], "empty cell at " + to_string(boxes[k]));
    if ((c.mask() & ~alphabet) != 0)
      return detail::violation(Rule::structure, boxes[k], "entry outside [1', n] at " + to_string(boxes[k]));
  }
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    const Box& b = boxes[k];
    CellSet c = f.cell(k);
    for (Box nb : {Box{b.row, b.col + 1}, Box{b.row + 1, b.col}}) {
      auto idx = shape.index_of(nb);
      if (idx && c.max() > f.cell(*idx).min())
        return detail::violation(Rule::order, b,
                                 "max at " + to_string(b) + " exceeds min at " + to_string(nb));
    }
  }
  // Occurrence counts per (column, letter) for unprimed and (row, letter) for primed.
  const int max_col = shape.rows() == 0 ? 0 : shape.row_end(1);
  for (int j = 1; j <= max_col; ++j) {
    std::uint32_t seen = 0;
    for (int i = 1; i <= shape.rows(); ++i) {
      auto idx = shape.index_of(Box{i, j});
      if (!idx) continue;
      std::uint32_t unprimed = f.cell(*idx).mask() & 0x55555554u;
      if (seen & unprimed)
        return detail::violation(Rule::column_unprimed, Box{i, j},
                                 "unprimed letter repeated in column " + std::to_string(j));
      seen |= unprimed;
    }
  }
  for (int i = 1; i <= shape.rows(); ++i) {
    std::uint32_t seen = 0;
    for (int j = shape.row_begin(i); j <= shape.row_end(i); ++j) {
      std::uint32_t primed = f.at(Box{i, j}).mask() & 0xAAAAAAAAu;
      if (seen & primed)
        return detail::violation(Rule::row_primed, Box{i, j},
                                 "primed letter repeated in row " + std::to_string(i));
      seen |= primed;
    }
  }
  if (f.family() == Family::P) {
    for (std::size_t k = 0; k < boxes.size(); ++k)
      if (boxes[k].diagonal() && f.cell(k).has_primed())
        return detail::violation(Rule::diagonal_primed, boxes[k],
                                 "primed entry on the diagonal at " + to_string(boxes[k]));
  }
  return {};
}

/// Single-valued validity: validate plus one entry per cell.
inline Validation validate_single(const Filling& f) {
  for (std::size_t k = 0; k < f.box_count(); ++k)
    if (f.cell(k).size() != 1)
      return detail::violation(Rule::structure, f.shape().boxes()[k], "cell is not a singleton");
  return validate(f);
}

inline Weight weight(const Filling& f) {
  Weight w{std::vector<int>(static_cast<std::size_t>(f.n()), 0)};
  for (CellSet c : f.cells())
    for (std::uint32_t m = c.mask(); m; m &= m - 1) {
      int letter = Entry(std::countr_zero(m)).letter();
      if (letter >= 1 && letter <= f.n()) ++w.counts[static_cast<std::size_t>(letter - 1)];
    }
  return w;
}

/// x^{weight}, coefficient 1, no b.
inline LaurentPoly monomial(const Filling& f) {
  Weight w = weight(f);
  std::vector<std::uint32_t> x(w.counts.begin(), w.counts.end());
  return LaurentPoly::monomial(std::move(x), 0);
}

inline std::string to_string(CellSet c) {
  std::string out;
  for (Entry e : c.entries()) {
    if (!out.empty()) out += ',';
    out += e.to_string();
  }
  return out;
}

/// Multi-line text picture.  Columns left of a row's first box show ".",
/// multi-entry cells are braced.
inline std::string to_string(const Filling& f) {
  const SkewShape& shape = f.shape();
  std::string out;
  for (int i = 1; i <= shape.rows(); ++i) {
    std::string line;
    for (int j = 1; j <= shape.row_end(i); ++j) {
      if (!line.empty()) line += ' ';
      if (j < shape.row_begin(i)) {
        line += '.';
        continue;
      }
      CellSet c = f.at(Box{i, j});
      line += c.size() == 1 ? to_string(c) : "{" + to_string(c) + "}";
    }
    out += line;
    out += '\n';
  }
  return out;
}

/// Builds a filling from per-row cell text, e.g. {{"1","1","1","3'"},{"2","2,3'"},{"3"}}.
/// Row r lists the boxes of row r+1 left to right.
inline Filling filling_from_rows(std::shared_ptr<const SkewShape> shape, int n, Family family,
                                 const std::vector<std::vector<std::string>>& rows) {
  Filling f(shape, n, family);
  if (static_cast<int>(rows.size()) != shape->rows()) throw Error("row count does not match the shape");
  for (int i = 1; i <= shape->rows(); ++i) {
    const auto& row = rows[static_cast<std::size_t>(i - 1)];
    int width = std::max(0, shape->row_end(i) - shape->row_begin(i) + 1);
    if (static_cast<int>(row.size()) != width)
      throw Error("row " + std::to_string(i) + " has the wrong number of cells");
    for (int j = 0; j < width; ++j) {
      CellSet c;
      std::string_view text = row[static_cast<std::size_t>(j)];
      std::size_t start = 0;
      while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        c = c.with(parse_entry(token));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      f.set(Box{i, shape->row_begin(i) + j}, c);
    }
  }
  return f;
}

}  // namespace kschur

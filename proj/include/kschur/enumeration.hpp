#pragma once

// Backtracking enumeration of shifted (set-valued) tableaux.
//
// Boxes are filled in row-major order so that the left and upper
// neighbours of a box are already fixed.  For a box with left cell L and
// upper cell U the smallest admissible entry is
//
//   > max L if max L is primed, >= max L otherwise   (primes once per row)
//   > max U if max U is unprimed, >= max U otherwise (letters once per column)
//
// and any set of larger entries may follow it; family P drops primed
// entries on the diagonal.  Cell sets are produced in lexicographic order
// of their sorted entry codes, which fixes the canonical output order.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <memory>
#include <optional>
#include <thread>
#include <vector>

#include "kschur/shapes.hpp"
#include "kschur/tableaux.hpp"

namespace kschur {

enum class Kind { single, set_valued };

inline const char* to_string(Kind k) noexcept { return k == Kind::single ? "single" : "set-valued"; }

struct EnumSpec {
  std::shared_ptr<const SkewShape> shape;
  int n = 1;
  Family family = Family::P;
  Kind kind = Kind::set_valued;
  std::optional<int> size_cap;

  EnumSpec() = default;
  EnumSpec(SkewShape s, int n_, Family f, Kind k, std::optional<int> cap = std::nullopt)
      : shape(std::make_shared<const SkewShape>(std::move(s))), n(n_), family(f), kind(k), size_cap(cap) {
    check();
  }
  EnumSpec(std::shared_ptr<const SkewShape> s, int n_, Family f, Kind k,
           std::optional<int> cap = std::nullopt)
      : shape(std::move(s)), n(n_), family(f), kind(k), size_cap(cap) {
    check();
  }

 private:
  void check() const {
    if (!shape) throw Error("enumeration spec without a shape");
    if (n < 0 || n > kMaxLetters) throw Error("alphabet bound out of range");
    if (size_cap && *size_cap < static_cast<int>(shape->size()))
      throw Error("size cap is smaller than the number of boxes");
  }
};

/// Default worker count: KSCHUR_THREADS if set, else 1.
inline int default_thread_count() {
  if (const char* env = std::getenv("KSCHUR_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

class Enumerator {
 public:
  explicit Enumerator(EnumSpec spec) : spec_(std::move(spec)) {
    const SkewShape& shape = *spec_.shape;
    const auto& boxes = shape.boxes();
    links_.reserve(boxes.size());
    for (const Box& b : boxes) {
      auto left = shape.index_of(Box{b.row, b.col - 1});
      auto up = shape.index_of(Box{b.row - 1, b.col});
      links_.push_back(Link{left ? static_cast<int>(*left) : -1, up ? static_cast<int>(*up) : -1,
                            b.diagonal() && spec_.family == Family::P});
    }
    top_code_ = 2 * spec_.n;
  }

  const EnumSpec& spec() const noexcept { return spec_; }

  /// Calls visit(const Filling&) once per tableau, in canonical order.  The
  /// filling reference is only valid during the call.
  template <class Visit>
  void for_each(Visit&& visit) const {
    Filling work(spec_.shape, spec_.n, spec_.family);
    if (links_.empty()) {
      visit(static_cast<const Filling&>(work));
      return;
    }
    fill_box(work, 0, 0, visit);
  }

  /// Candidate cells of the first box in canonical order.  Parallel folds
  /// split on these.
  std::vector<CellSet> first_box_candidates() const {
    std::vector<CellSet> out;
    if (links_.empty()) return out;
    Filling work(spec_.shape, spec_.n, spec_.family);
    for_each_cell(work, 0, 0, [&](CellSet c, int) { out.push_back(c); });
    return out;
  }

  /// Runs the enumeration restricted to a fixed first cell.
  template <class Visit>
  void for_each_with_first(CellSet first, Visit&& visit) const {
    Filling work(spec_.shape, spec_.n, spec_.family);
    work.set_cell(0, first);
    if (links_.size() == 1) {
      visit(static_cast<const Filling&>(work));
      return;
    }
    fill_box(work, 1, first.size(), visit);
  }

 private:
  struct Link {
    int left;
    int up;
    bool unprimed_only;
  };

  int lowest_code(const Filling& work, std::size_t k) const {
    const Link& l = links_[k];
    int lo = 1;
    if (l.left >= 0) {
      Entry m = work.cell(static_cast<std::size_t>(l.left)).max();
      lo = std::max(lo, m.code() + (m.is_primed() ? 1 : 0));
    }
    if (l.up >= 0) {
      Entry m = work.cell(static_cast<std::size_t>(l.up)).max();
      lo = std::max(lo, m.code() + (m.is_primed() ? 0 : 1));
    }
    return lo;
  }

  // Calls emit(cell, size) for each admissible cell of box k, lexicographic.
  template <class Emit>
  void for_each_cell(const Filling& work, std::size_t k, int used, Emit&& emit) const {
    const Link& l = links_[k];
    const int step = l.unprimed_only ? 2 : 1;
    int lo = lowest_code(work, k);
    if (l.unprimed_only && lo % 2 == 1) ++lo;
    const int budget = spec_.size_cap ? *spec_.size_cap - used - remaining_after(k) : 1 << 20;
    if (budget < 1) return;
    const int max_extra = spec_.kind == Kind::single ? 0 : budget - 1;
    for (int c = lo; c <= top_code_; c += step) extend(CellSet(CellSet::bit(c)), c, 1, max_extra, step, emit);
  }

  template <class Emit>
  void extend(CellSet cell, int last, int count, int extra_left, int step, Emit& emit) const {
    emit(cell, count);
    if (extra_left == 0) return;
    for (int c = last + step; c <= top_code_; c += step)
      extend(cell.with(Entry(c)), c, count + 1, extra_left - 1, step, emit);
  }

  int remaining_after(std::size_t k) const noexcept {
    return static_cast<int>(links_.size() - k - 1);
  }

  template <class Visit>
  void fill_box(Filling& work, std::size_t k, int used, Visit& visit) const {
    for_each_cell(work, k, used, [&](CellSet c, int sz) {
      work.set_cell(k, c);
      if (k + 1 == links_.size()) {
        visit(static_cast<const Filling&>(work));
      } else {
        fill_box(work, k + 1, used + sz, visit);
      }
    });
  }

  EnumSpec spec_;
  std::vector<Link> links_;
  int top_code_ = 0;
};

/// All tableaux of the spec, materialised, in canonical order.
inline std::vector<Filling> enumerate(const EnumSpec& spec) {
  std::vector<Filling> out;
  Enumerator(spec).for_each([&](const Filling& f) { out.push_back(f); });
  return out;
}

/// Folds the tableau stream.  With threads > 1 the first box's candidates
/// are dealt round-robin to workers, each folding into its own accumulator,
/// and the partial results are merged in worker order.  `init` must be the
/// identity of `merge`, and `merge` associative and commutative, so the
/// result matches the sequential fold.
template <class Acc, class Step, class Merge>
Acc fold(const EnumSpec& spec, Acc init, Step step, Merge merge, int threads = 1) {
  Enumerator en(spec);
  if (threads <= 1 || spec.shape->empty()) {
    Acc acc = std::move(init);
    en.for_each([&](const Filling& f) { step(acc, f); });
    return acc;
  }
  auto firsts = en.first_box_candidates();
  const auto workers = static_cast<std::size_t>(threads);
  std::vector<Acc> parts(workers, init);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < firsts.size(); i += workers)
          en.for_each_with_first(firsts[i], [&](const Filling& f) { step(parts[w], f); });
      });
    }
  }
  Acc acc = std::move(init);
  for (auto& p : parts) merge(acc, p);
  return acc;
}

inline std::uint64_t count(const EnumSpec& spec, int threads = 1) {
  return fold(
      spec, std::uint64_t{0}, [](std::uint64_t& a, const Filling&) { ++a; },
      [](std::uint64_t& a, const std::uint64_t& b) { a += b; }, threads);
}

/// Every assignment of nonempty subsets of the 2n-letter alphabet (singletons
/// for Kind::single) to the boxes, kept when validate accepts it.  Scale is
/// capped at 5 boxes and n <= 2.
inline std::vector<Filling> naive_oracle(const EnumSpec& spec) {
  const SkewShape& shape = *spec.shape;
  if (shape.size() > 5 || spec.n > 2) throw Error("oracle scale exceeded");
  std::vector<CellSet> choices;
  const int codes = 2 * spec.n;
  for (std::uint32_t m = 1; m < (std::uint32_t{1} << codes); ++m) {
    CellSet c(m << 1);
    if (spec.kind == Kind::single && c.size() != 1) continue;
    choices.push_back(c);
  }
  std::vector<Filling> out;
  const std::size_t nb = shape.size();
  if (nb == 0) {
    out.emplace_back(spec.shape, spec.n, spec.family);
    return out;
  }
  if (choices.empty()) return out;
  std::vector<std::size_t> digit(nb, 0);
  Filling f(spec.shape, spec.n, spec.family);
  while (true) {
    for (std::size_t k = 0; k < nb; ++k) f.set_cell(k, choices[digit[k]]);
    bool keep = spec.kind == Kind::single ? static_cast<bool>(validate_single(f)) : static_cast<bool>(validate(f));
    if (keep && spec.size_cap && f.size() > *spec.size_cap) keep = false;
    if (keep) out.push_back(f);
    std::size_t k = 0;
    while (k < nb && ++digit[k] == choices.size()) digit[k++] = 0;
    if (k == nb) break;
  }
  return out;
}

}  // namespace kschur

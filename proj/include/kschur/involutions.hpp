#pragma once

// Minimal tableaux, the sign-reversing involution iota, the toggle pi on
// removable-box subsets, and pairing certificates for the double-skew sums.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kschur/enumeration.hpp"
#include "kschur/genfunc.hpp"
#include "kschur/shapes.hpp"
#include "kschur/tableaux.hpp"

namespace kschur {

/// The single-valued tableau with the least entry sum.  Each box gets the
/// smallest entry its left and upper neighbours allow, in row-major order;
/// the bound is monotone in the neighbours, so the result is the pointwise
/// minimum of all tableaux of the shape and in particular has minimal sum.
inline Filling minimal_tableau(std::shared_ptr<const SkewShape> shape, Family family, int n) {
  Filling f(shape, n, family);
  const auto& boxes = shape->boxes();
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    const Box& b = boxes[k];
    int lo = 1;
    if (auto left = shape->index_of(Box{b.row, b.col - 1})) {
      Entry m = f.cell(*left).max();
      lo = std::max(lo, m.code() + (m.is_primed() ? 1 : 0));
    }
    if (auto up = shape->index_of(Box{b.row - 1, b.col})) {
      Entry m = f.cell(*up).max();
      lo = std::max(lo, m.code() + (m.is_primed() ? 0 : 1));
    }
    if (family == Family::P && b.diagonal() && lo % 2 == 1) ++lo;
    if (lo > 2 * n) throw Error("empty tableau set");
    f.set_cell(k, CellSet(CellSet::bit(lo)));
  }
  return f;
}

inline Filling minimal_tableau(const SkewShape& shape, Family family, int n) {
  return minimal_tableau(std::make_shared<const SkewShape>(shape), family, n);
}

/// True when the shape has at least one tableau with entries up to n.
inline bool admissible(const SkewShape& shape, Family family, int n) {
  try {
    (void)minimal_tableau(shape, family, n);
    return true;
  } catch (const Error&) {
    return false;
  }
}

/// Toggles the minimal tableau's entry in the first box (column-major
/// order) where T and the minimal tableau differ.
inline Filling iota(const Filling& t, const Filling& minimal) {
  const auto order = boxes_in_order(t.shape());
  for (const Box& b : order) {
    CellSet mine = t.at(b);
    CellSet base = minimal.at(b);
    if (mine == base) continue;
    Entry e = base.min();
    Filling out = t;
    out.set(b, mine.contains(e) ? mine.without(e) : mine.with(e));
    return out;
  }
  throw Error("iota undefined on the minimal tableau");
}

inline Filling iota(const Filling& t) {
  return iota(t, minimal_tableau(t.shape_ptr(), t.family(), t.n()));
}

struct InvolutionReport {
  bool admissible = true;
  std::uint64_t tableaux = 0;
  std::uint64_t not_involutive = 0;   // iota(iota(T)) != T
  std::uint64_t fixed = 0;            // iota(T) == T
  std::uint64_t size_change = 0;      // | |iota(T)| - |T| | != 1
  std::uint64_t invalid_image = 0;    // iota(T) fails validation
  std::uint64_t hits_minimal = 0;     // iota(T) is the minimal tableau
  std::int64_t signed_count = 0;      // sum of (-1)^(|T| - |shape|)

  std::uint64_t violations() const noexcept {
    return not_involutive + fixed + size_change + invalid_image + hits_minimal;
  }
  bool ok() const noexcept { return violations() == 0; }
};

/// Applies iota to every non-minimal set-valued tableau of the shape and
/// tallies each property failure.
inline InvolutionReport verify_involution(const SkewShape& shape, Family family, int n) {
  InvolutionReport r;
  auto sp = std::make_shared<const SkewShape>(shape);
  Filling minimal;
  try {
    minimal = minimal_tableau(sp, family, n);
  } catch (const Error&) {
    r.admissible = false;
    return r;
  }
  const int boxes = static_cast<int>(shape.size());
  Enumerator(EnumSpec(sp, n, family, Kind::set_valued)).for_each([&](const Filling& t) {
    ++r.tableaux;
    r.signed_count += ((t.size() - boxes) % 2 == 0) ? 1 : -1;
    if (t == minimal) return;
    Filling img = iota(t, minimal);
    if (img == t) {
      ++r.fixed;
      return;
    }
    if (!validate(img)) {
      ++r.invalid_image;
      return;
    }
    if (img == minimal) {
      ++r.hits_minimal;
      return;
    }
    const int d = img.size() - t.size();
    if (d != 1 && d != -1) ++r.size_change;
    if (!(iota(img, minimal) == t)) ++r.not_involutive;
  });
  return r;
}

/// A subset B of the removable boxes of mu and the partition nu = mu - B.
struct NuSubsetState {
  StrictPartition base;
  std::vector<Box> chosen;  // sorted by row

  NuSubsetState() = default;
  NuSubsetState(StrictPartition mu, std::vector<Box> b) : base(std::move(mu)), chosen(std::move(b)) {
    std::sort(chosen.begin(), chosen.end());
    (void)remove_subset(base, chosen);  // validates B against Rem(mu)
  }

  StrictPartition nu() const { return remove_subset(base, chosen); }
  std::size_t b() const noexcept { return chosen.size(); }

  friend bool operator==(const NuSubsetState&, const NuSubsetState&) = default;
};

/// Toggles the last-row removable box of mu in B.
inline NuSubsetState pi(const NuSubsetState& s) {
  if (s.base.empty()) throw Error("pi needs a nonempty mu");
  const Box last = removable_boxes(s.base).last_row_box();
  std::vector<Box> b = s.chosen;
  auto it = std::find(b.begin(), b.end(), last);
  if (it != b.end()) {
    b.erase(it);
  } else {
    b.push_back(last);
  }
  return NuSubsetState(s.base, std::move(b));
}

enum class PairTag { iota, pi };

inline const char* to_string(PairTag t) noexcept { return t == PairTag::iota ? "iota" : "pi"; }

/// A tableau of lambda/nu together with the removed boxes defining nu.
struct CertElement {
  std::vector<Box> removed;
  Filling tableau;
};

struct CertPair {
  CertElement first;
  CertElement second;
  PairTag tag = PairTag::iota;
};

struct PairingCertificate {
  StrictPartition lambda;
  StrictPartition mu;
  int n = 1;
  Family family = Family::P;
  bool minimal_only = false;
  std::vector<CertPair> pairs;
  std::vector<CertElement> leftover;

  std::size_t elements() const noexcept { return 2 * pairs.size() + leftover.size(); }
  bool complete() const noexcept { return leftover.empty(); }
};

/// Default cap on the number of tableaux a full certificate may cover.
inline constexpr std::uint64_t kCertificateLimit = 500000;

/// Pairs every tableau of the disjoint union over nu of SSVT(lambda/nu, n):
/// non-minimal tableaux with their iota image, minimal tableaux of lambda/nu
/// with the minimal tableau of lambda/pi(nu).  With minimal_only only the
/// minimal tableaux are covered.  Unpartnered elements land in `leftover`.
inline PairingCertificate pairing_certificate(const StrictPartition& lambda, const StrictPartition& mu, int n,
                                              Family family, bool minimal_only = false,
                                              std::uint64_t limit = kCertificateLimit) {
  if (mu.empty()) throw Error("pairing needs a nonempty mu");
  if (!is_subpartition(mu, lambda)) throw Error("pairing needs mu inside lambda");
  PairingCertificate cert{lambda, mu, n, family, minimal_only, {}, {}};
  const Box last = removable_boxes(mu).last_row_box();
  const auto choices = removal_choices(mu);

  struct Slot {
    std::shared_ptr<const SkewShape> shape;
    std::optional<Filling> minimal;
  };
  std::vector<Slot> slots;
  for (const auto& c : choices) {
    Slot s{std::make_shared<const SkewShape>(lambda, c.nu), std::nullopt};
    try {
      s.minimal = minimal_tableau(s.shape, family, n);
    } catch (const Error&) {
    }
    slots.push_back(std::move(s));
  }
  auto partner_index = [&](std::size_t i) {
    NuSubsetState img = pi(NuSubsetState(mu, choices[i].removed));
    for (std::size_t j = 0; j < choices.size(); ++j)
      if (NuSubsetState(mu, choices[j].removed) == img) return j;
    throw Error("pi image not among the removal choices");
  };

  if (!minimal_only) {
    std::uint64_t total = 0;
    for (const auto& s : slots)
      if (s.minimal) total += count(EnumSpec(s.shape, n, family, Kind::set_valued));
    if (total > limit) throw Error("certificate scale exceeded");
  }

  for (std::size_t i = 0; i < choices.size(); ++i) {
    const Slot& s = slots[i];
    if (!s.minimal) continue;
    const bool has_last = std::find(choices[i].removed.begin(), choices[i].removed.end(), last) !=
                          choices[i].removed.end();
    const std::size_t j = partner_index(i);
    CertElement me{choices[i].removed, *s.minimal};
    if (!slots[j].minimal) {
      cert.leftover.push_back(std::move(me));
    } else if (!has_last) {
      cert.pairs.push_back(CertPair{std::move(me), CertElement{choices[j].removed, *slots[j].minimal}, PairTag::pi});
    }
    if (minimal_only) continue;
    Enumerator(EnumSpec(s.shape, n, family, Kind::set_valued)).for_each([&](const Filling& t) {
      if (t == *s.minimal) return;
      Filling img = iota(t, *s.minimal);
      if (t.size() < img.size())
        cert.pairs.push_back(CertPair{CertElement{choices[i].removed, t}, CertElement{choices[i].removed, img},
                                      PairTag::iota});
    });
  }
  return cert;
}

struct CertificateCheck {
  bool ok = true;
  std::string message;
  std::uint64_t elements = 0;
};

/// Re-validates a certificate from scratch: every element is a valid tableau
/// of its shape, every pair is related by its tag, no element repeats, and
/// the elements exhaust the tableau sets (or the minimal tableaux, for a
/// minimal-only certificate).
inline CertificateCheck check_certificate(const PairingCertificate& cert) {
  CertificateCheck r;
  auto fail = [&](std::string m) {
    r.ok = false;
    r.message = std::move(m);
    return r;
  };
  if (cert.mu.empty() || !is_subpartition(cert.mu, cert.lambda)) return fail("mu must be nonempty and inside lambda");
  if (!cert.leftover.empty()) return fail(std::to_string(cert.leftover.size()) + " unpaired elements");
  const Box last = removable_boxes(cert.mu).last_row_box();

  std::set<std::pair<std::vector<Box>, std::vector<std::uint32_t>>> seen;
  auto key_of = [](const CertElement& e) {
    std::vector<Box> rem = e.removed;
    std::sort(rem.begin(), rem.end());
    std::vector<std::uint32_t> cells;
    for (CellSet c : e.tableau.cells()) cells.push_back(c.mask());
    return std::make_pair(std::move(rem), std::move(cells));
  };
  auto check_element = [&](const CertElement& e) -> std::string {
    StrictPartition nu;
    try {
      nu = remove_subset(cert.mu, e.removed);
    } catch (const Error& err) {
      return err.what();
    }
    if (!(e.tableau.shape() == SkewShape(cert.lambda, nu))) return "tableau shape does not match lambda/nu";
    if (e.tableau.n() != cert.n || e.tableau.family() != cert.family) return "tableau alphabet or family mismatch";
    if (auto v = validate(e.tableau); !v) return "invalid tableau: " + v.message;
    if (!seen.insert(key_of(e)).second) return "element appears twice";
    return {};
  };

  for (const auto& p : cert.pairs) {
    for (const auto* e : {&p.first, &p.second})
      if (auto m = check_element(*e); !m.empty()) return fail(m);
    const Filling min_first = minimal_tableau(p.first.tableau.shape_ptr(), cert.family, cert.n);
    const Filling min_second = minimal_tableau(p.second.tableau.shape_ptr(), cert.family, cert.n);
    if (p.tag == PairTag::iota) {
      if (key_of(p.first).first != key_of(p.second).first) return fail("iota pair spans two shapes");
      if (p.first.tableau == min_first || p.second.tableau == min_second)
        return fail("iota pair contains a minimal tableau");
      if (!(iota(p.first.tableau, min_first) == p.second.tableau) ||
          !(iota(p.second.tableau, min_second) == p.first.tableau))
        return fail("iota pair is not related by iota");
      const int d = p.first.tableau.size() - p.second.tableau.size();
      if (d != 1 && d != -1) return fail("iota pair sizes do not differ by one");
    } else {
      if (!(p.first.tableau == min_first) || !(p.second.tableau == min_second))
        return fail("pi pair element is not a minimal tableau");
      NuSubsetState a(cert.mu, p.first.removed);
      NuSubsetState b(cert.mu, p.second.removed);
      if (!(pi(a) == b)) return fail("pi pair is not related by pi");
      const bool a_has = std::find(a.chosen.begin(), a.chosen.end(), last) != a.chosen.end();
      const bool b_has = std::find(b.chosen.begin(), b.chosen.end(), last) != b.chosen.end();
      if (a_has == b_has) return fail("pi pair does not differ in the last-row box");
    }
  }
  r.elements = seen.size();

  std::uint64_t expected = 0;
  for (const auto& c : removal_choices(cert.mu)) {
    SkewShape shape(cert.lambda, c.nu);
    if (cert.minimal_only) {
      expected += admissible(shape, cert.family, cert.n) ? 1 : 0;
    } else {
      expected += count(EnumSpec(shape, cert.n, cert.family, Kind::set_valued));
    }
  }
  if (expected != r.elements)
    return fail("certificate covers " + std::to_string(r.elements) + " of " + std::to_string(expected) +
                " elements");
  return r;
}

}  // namespace kschur

#pragma once

// Generating functions of shifted tableaux:
//
//   P, Q       sum of x^wt(T) over single-valued tableaux of a (skew) shape
//   GP, GQ     sum of b^(|T| - |shape|) x^wt(T) over set-valued tableaux
//   GP//, GQ// sum over nu = mu minus removable boxes of b^|mu/nu| GP_{lambda/nu}
//
// together with the specialisation x_i = b, b -> -1/b and the identity
// checks built on it.

#include <cstdint>
#include <string>
#include <vector>

#include "kschur/enumeration.hpp"
#include "kschur/polyring.hpp"
#include "kschur/shapes.hpp"
#include "kschur/tableaux.hpp"

namespace kschur {

enum class FunctionFamily { P, Q, GP, GQ, GPdouble, GQdouble };

inline const char* to_string(FunctionFamily f) noexcept {
  switch (f) {
    case FunctionFamily::P: return "P";
    case FunctionFamily::Q: return "Q";
    case FunctionFamily::GP: return "GP";
    case FunctionFamily::GQ: return "GQ";
    case FunctionFamily::GPdouble: return "GPdouble";
    case FunctionFamily::GQdouble: return "GQdouble";
  }
  return "?";
}

inline FunctionFamily parse_function_family(std::string_view s) {
  if (s == "P") return FunctionFamily::P;
  if (s == "Q") return FunctionFamily::Q;
  if (s == "GP") return FunctionFamily::GP;
  if (s == "GQ") return FunctionFamily::GQ;
  if (s == "GPdouble" || s == "GP//") return FunctionFamily::GPdouble;
  if (s == "GQdouble" || s == "GQ//") return FunctionFamily::GQdouble;
  throw Error("unknown function family '" + std::string(s) + "'");
}

inline Family tableau_family(FunctionFamily f) noexcept {
  switch (f) {
    case FunctionFamily::P:
    case FunctionFamily::GP:
    case FunctionFamily::GPdouble: return Family::P;
    default: return Family::Q;
  }
}

inline bool is_double(FunctionFamily f) noexcept {
  return f == FunctionFamily::GPdouble || f == FunctionFamily::GQdouble;
}

inline bool is_k_theoretic(FunctionFamily f) noexcept {
  return f != FunctionFamily::P && f != FunctionFamily::Q;
}

/// The set-valued family GP/GQ matching a tableau family.
inline FunctionFamily k_family(Family f) noexcept {
  return f == Family::P ? FunctionFamily::GP : FunctionFamily::GQ;
}

/// For P, Q, GP, GQ the shape is outer/inner and inner must fit in outer.
/// For the double families outer is lambda and inner is mu; mu outside
/// lambda is allowed and gives zero.
struct FunctionSpec {
  FunctionFamily family = FunctionFamily::GP;
  StrictPartition outer;
  StrictPartition inner;
  int n = 1;

  FunctionSpec() = default;
  FunctionSpec(FunctionFamily f, StrictPartition o, StrictPartition i, int n_)
      : family(f), outer(std::move(o)), inner(std::move(i)), n(n_) {
    if (n < 0 || n > kMaxLetters) throw Error("variable count out of range");
    if (!is_double(family) && !is_subpartition(inner, outer))
      throw Error("inner partition is not contained in the outer partition");
  }
  FunctionSpec(FunctionFamily f, const SkewShape& s, int n_) : FunctionSpec(f, s.outer(), s.inner(), n_) {}

  SkewShape shape() const { return SkewShape(outer, inner); }

  std::string describe() const {
    std::string sep = is_double(family) ? "//" : "/";
    std::string s = std::string(to_string(family)) + "[" + outer.to_string();
    if (!inner.empty()) s += sep + inner.to_string();
    return s + "; n=" + std::to_string(n) + "]";
  }
};

namespace detail {

/// Sum of b^(|T| - boxes) x^wt(T) over the spec's tableaux.
inline LaurentPoly tableau_sum(const EnumSpec& es, int threads) {
  const auto nv = static_cast<std::size_t>(es.n);
  const auto boxes = static_cast<std::int64_t>(es.shape->size());
  auto acc = fold(
      es, PolyAccumulator(nv),
      [nv, boxes](PolyAccumulator& a, const Filling& f) {
        MonomialKey key{std::vector<std::uint32_t>(nv, 0), 0};
        int sz = 0;
        for (CellSet c : f.cells()) {
          for (std::uint32_t m = c.mask(); m; m &= m - 1)
            ++key.x[static_cast<std::size_t>(Entry(std::countr_zero(m)).letter() - 1)];
          sz += c.size();
        }
        key.b = sz - boxes;
        a.add(std::move(key), 1L);
      },
      [](PolyAccumulator& a, const PolyAccumulator& b) { a.merge(b); }, threads);
  return acc.finish();
}

}  // namespace detail

/// Every nu obtained from mu by deleting a subset of its removable boxes,
/// paired with the deleted subset.  Subsets are listed by bitmask over the
/// removable boxes taken top to bottom (bit 0 = topmost).
struct RemovalChoice {
  std::vector<Box> removed;
  StrictPartition nu;
};

inline std::vector<RemovalChoice> removal_choices(const StrictPartition& mu) {
  if (mu.empty()) return {RemovalChoice{{}, mu}};
  auto rem = removable_boxes(mu);
  std::vector<RemovalChoice> out;
  const std::size_t a = rem.size();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << a); ++mask) {
    RemovalChoice c;
    for (std::size_t i = 0; i < a; ++i)
      if (mask & (std::uint32_t{1} << i)) c.removed.push_back(rem.boxes[i]);
    c.nu = remove_subset(mu, c.removed);
    out.push_back(std::move(c));
  }
  return out;
}

inline LaurentPoly compute(const FunctionSpec& spec, int threads = 1) {
  const auto nv = static_cast<std::size_t>(spec.n);
  const Family tf = tableau_family(spec.family);
  if (is_double(spec.family)) {
    if (!is_subpartition(spec.inner, spec.outer)) return LaurentPoly::zero(nv);
    LaurentPoly total(nv);
    for (const auto& choice : removal_choices(spec.inner)) {
      EnumSpec es(SkewShape(spec.outer, choice.nu), spec.n, tf, Kind::set_valued);
      total += detail::tableau_sum(es, threads)
                   .scalar_beta_power(static_cast<std::int64_t>(choice.removed.size()));
    }
    return total;
  }
  const Kind kind = is_k_theoretic(spec.family) ? Kind::set_valued : Kind::single;
  return detail::tableau_sum(EnumSpec(spec.shape(), spec.n, tf, kind), threads);
}

/// The b^0 part of GP/GQ.
inline LaurentPoly beta_zero(const FunctionSpec& spec, int threads = 1) {
  if (spec.family != FunctionFamily::GP && spec.family != FunctionFamily::GQ)
    throw Error("beta_zero needs a GP or GQ spec");
  return compute(spec, threads).beta_slice(0);
}

/// f(b, ..., b | -1/b): the parameter b becomes -1/b and every x_i becomes
/// the (new) b.  The parameter substitution happens before x_i -> b.
inline LaurentPoly specialize(const LaurentPoly& p) {
  return p.subst_beta_neg_inverse().subst_x_to_beta();
}

inline LaurentPoly special_value(const FunctionSpec& spec, int threads = 1) {
  if (!is_k_theoretic(spec.family)) throw Error("special_value needs a GP, GQ or double family");
  return specialize(compute(spec, threads));
}

/// Sum over set-valued tableaux of (-1)^(|T| - |shape|).
inline BigInt signed_count(const FunctionSpec& spec, int threads = 1) {
  if (spec.family != FunctionFamily::GP && spec.family != FunctionFamily::GQ)
    throw Error("signed_count needs a GP or GQ spec");
  EnumSpec es(spec.shape(), spec.n, tableau_family(spec.family), Kind::set_valued);
  const int boxes = static_cast<int>(es.shape->size());
  auto s = fold(
      es, std::int64_t{0}, [boxes](std::int64_t& a, const Filling& f) { a += ((f.size() - boxes) % 2 == 0) ? 1 : -1; },
      [](std::int64_t& a, const std::int64_t& b) { a += b; }, threads);
  return BigInt(s);
}

/// One nu-term of the double-skew special value:
/// (-1/b)^|mu/nu| * b^|lambda/nu| = (-1)^removed * b^(|lambda| - |mu|).
struct DoubleSkewTerm {
  std::vector<Box> removed;
  StrictPartition nu;
  int sign = 1;
  std::int64_t beta_exponent = 0;
};

struct DoubleSkewShortcut {
  LaurentPoly value;
  std::vector<DoubleSkewTerm> terms;
  std::size_t removable = 0;
};

/// Double-skew special value from the skew special values b^|lambda/nu|,
/// without enumerating tableaux.
inline DoubleSkewShortcut double_skew_shortcut(const StrictPartition& lambda, const StrictPartition& mu,
                                               std::size_t nvars = 0) {
  DoubleSkewShortcut out{LaurentPoly(nvars), {}, 0};
  if (!is_subpartition(mu, lambda)) return out;
  if (mu.empty()) {
    out.value = LaurentPoly::beta_power(nvars, lambda.weight());
    out.terms.push_back(DoubleSkewTerm{{}, mu, 1, lambda.weight()});
    return out;
  }
  out.removable = removable_boxes(mu).size();
  for (auto& choice : removal_choices(mu)) {
    const auto removed = static_cast<std::int64_t>(choice.removed.size());
    const std::int64_t skew = lambda.weight() - choice.nu.weight();
    // (-b^-1)^removed * b^skew
    LaurentPoly term = LaurentPoly::beta_power(nvars, skew - removed);
    if (removed % 2) term = -term;
    out.value += term;
    out.terms.push_back(DoubleSkewTerm{std::move(choice.removed), std::move(choice.nu),
                                       removed % 2 ? -1 : 1, skew - removed});
  }
  return out;
}

struct CoproductReport {
  bool equal = false;
  LaurentPoly lhs;
  LaurentPoly rhs;
  LaurentPoly residual;
  std::size_t nu_terms = 0;
};

/// f_lambda(x, y) against sum_nu f_nu(x) f_{lambda/nu}(y) (P, Q) or
/// sum_nu f_nu(x) f_{lambda//nu}(y) (GP, GQ).  x occupies the first n_x
/// variables, y the next n_y.  nu runs over strict partitions inside lambda;
/// the double-skew factor vanishes for every other nu.
inline CoproductReport coproduct_check(const StrictPartition& lambda, int nx, int ny, FunctionFamily family,
                                       int threads = 1) {
  if (is_double(family)) throw Error("coproduct_check takes P, Q, GP or GQ");
  if (lambda.weight() > 6) throw Error("coproduct_check is limited to |lambda| <= 6");
  if (nx < 0 || ny < 0 || nx + ny > kMaxLetters) throw Error("variable counts out of range");
  const auto total = static_cast<std::size_t>(nx + ny);
  CoproductReport r;
  r.lhs = compute(FunctionSpec(family, lambda, {}, nx + ny), threads);
  r.rhs = LaurentPoly(total);
  const FunctionFamily right_family =
      family == FunctionFamily::GP ? FunctionFamily::GPdouble
                                   : (family == FunctionFamily::GQ ? FunctionFamily::GQdouble : family);
  for (const auto& nu : subpartitions(lambda)) {
    LaurentPoly left = compute(FunctionSpec(family, nu, {}, nx), threads);
    if (left.is_zero()) continue;
    LaurentPoly right = compute(FunctionSpec(right_family, lambda, nu, ny), threads);
    r.rhs += left.embed(total, 0) * right.embed(total, static_cast<std::size_t>(nx));
    ++r.nu_terms;
  }
  r.residual = r.lhs - r.rhs;
  r.equal = r.residual.is_zero();
  return r;
}

struct ParityReport {
  std::uint64_t count = 0;
  bool is_odd = false;
};

/// Number of set-valued tableaux underlying a GP/GQ spec.
inline ParityReport parity_report(const FunctionSpec& spec, int threads = 1) {
  if (spec.family != FunctionFamily::GP && spec.family != FunctionFamily::GQ)
    throw Error("parity_report needs a GP or GQ spec");
  EnumSpec es(spec.shape(), spec.n, tableau_family(spec.family), Kind::set_valued);
  std::uint64_t c = count(es, threads);
  return ParityReport{c, c % 2 == 1};
}

}  // namespace kschur

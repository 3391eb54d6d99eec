#pragma once

// Sparse Laurent polynomials in x1..xn (nonnegative exponents) and b
// (integer exponents) with arbitrary-precision integer coefficients.
//
// The ring context is the variable count n; every operation on two
// polynomials requires the same n.  Terms are kept in a map ordered by
// (b exponent, x exponents lexicographic), which is also the print order.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kschur/shapes.hpp"

namespace kschur {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct MonomialKey {
  std::vector<std::uint32_t> x;
  std::int64_t b = 0;

  std::uint64_t x_degree() const noexcept {
    std::uint64_t d = 0;
    for (auto e : x) d += e;
    return d;
  }

  friend bool operator==(const MonomialKey&, const MonomialKey&) = default;
  friend bool operator<(const MonomialKey& l, const MonomialKey& r) noexcept {
    if (l.b != r.b) return l.b < r.b;
    return l.x < r.x;
  }
};

struct MonomialKeyHash {
  std::size_t operator()(const MonomialKey& k) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(k.b);
    for (auto e : k.x) h = h * 1000003u ^ e;
    return h;
  }
};

class LaurentPoly {
 public:
  using TermMap = std::map<MonomialKey, BigInt>;

  explicit LaurentPoly(std::size_t nvars = 0) : n_(nvars) {}

  static LaurentPoly zero(std::size_t nvars) { return LaurentPoly(nvars); }

  static LaurentPoly constant(std::size_t nvars, const BigInt& c) {
    LaurentPoly p(nvars);
    p.add_term(MonomialKey{std::vector<std::uint32_t>(nvars, 0), 0}, c);
    return p;
  }

  static LaurentPoly one(std::size_t nvars) { return constant(nvars, 1); }

  /// x_i, 1-based.
  static LaurentPoly variable(std::size_t nvars, std::size_t i) {
    if (i < 1 || i > nvars) throw Error("variable index out of range");
    MonomialKey k{std::vector<std::uint32_t>(nvars, 0), 0};
    k.x[i - 1] = 1;
    LaurentPoly p(nvars);
    p.add_term(std::move(k), 1);
    return p;
  }

  static LaurentPoly beta_power(std::size_t nvars, std::int64_t k) {
    LaurentPoly p(nvars);
    p.add_term(MonomialKey{std::vector<std::uint32_t>(nvars, 0), k}, 1);
    return p;
  }

  static LaurentPoly monomial(std::vector<std::uint32_t> x, std::int64_t b, const BigInt& c = 1) {
    LaurentPoly p(x.size());
    p.add_term(MonomialKey{std::move(x), b}, c);
    return p;
  }

  std::size_t nvars() const noexcept { return n_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  BigInt coefficient(const MonomialKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Adds c * key; drops the term when it cancels.
  void add_term(MonomialKey key, const BigInt& c) {
    if (key.x.size() != n_) throw Error("monomial has the wrong number of variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& q) {
    require_same_ring(q);
    for (const auto& [k, c] : q.terms_) add_term(k, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& q) {
    require_same_ring(q);
    for (const auto& [k, c] : q.terms_) add_term(k, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }

  friend LaurentPoly operator-(const LaurentPoly& p) {
    LaurentPoly out(p.n_);
    for (const auto& [k, c] : p.terms_) out.terms_.emplace(k, -c);
    return out;
  }

  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    p.require_same_ring(q);
    std::unordered_map<MonomialKey, BigInt, MonomialKeyHash> acc;
    for (const auto& [kp, cp] : p.terms_) {
      for (const auto& [kq, cq] : q.terms_) {
        MonomialKey k{kp.x, kp.b + kq.b};
        for (std::size_t i = 0; i < k.x.size(); ++i) k.x[i] += kq.x[i];
        acc[std::move(k)] += cp * cq;
      }
    }
    LaurentPoly out(p.n_);
    for (auto& [k, c] : acc)
      if (c != 0) out.terms_.emplace(k, std::move(c));
    return out;
  }

  LaurentPoly& operator*=(const LaurentPoly& q) { return *this = *this * q; }

  friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) {
    return p.n_ == q.n_ && p.terms_ == q.terms_;
  }

  /// Multiplies by b^k.
  LaurentPoly scalar_beta_power(std::int64_t k) const {
    LaurentPoly out(n_);
    for (const auto& [key, c] : terms_) out.terms_.emplace(MonomialKey{key.x, key.b + k}, c);
    return out;
  }

  /// x_i -> b for every i.  The result is a polynomial in b alone.
  LaurentPoly subst_x_to_beta() const {
    LaurentPoly out(n_);
    const std::vector<std::uint32_t> zeros(n_, 0);
    for (const auto& [key, c] : terms_)
      out.add_term(MonomialKey{zeros, key.b + static_cast<std::int64_t>(key.x_degree())}, c);
    return out;
  }

  /// b -> -1/b.
  LaurentPoly subst_beta_neg_inverse() const {
    LaurentPoly out(n_);
    for (const auto& [key, c] : terms_) {
      BigInt signed_c = (key.b % 2 != 0) ? BigInt(-c) : c;
      out.add_term(MonomialKey{key.x, -key.b}, signed_c);
    }
    return out;
  }

  /// Terms with b exponent k, returned with that b exponent intact.
  LaurentPoly beta_slice(std::int64_t k) const {
    LaurentPoly out(n_);
    for (const auto& [key, c] : terms_)
      if (key.b == k) out.terms_.emplace(key, c);
    return out;
  }

  Rational eval_integers(std::span<const BigInt> xvals, const BigInt& bval) const {
    if (xvals.size() != n_) throw Error("eval_integers: wrong number of x values");
    Rational total = 0;
    for (const auto& [key, c] : terms_) {
      if (bval == 0 && key.b < 0) throw Error("eval_integers: b = 0 with a negative b exponent");
      Rational term = Rational(c);
      for (std::size_t i = 0; i < n_; ++i) term *= Rational(boost::multiprecision::pow(xvals[i], key.x[i]));
      if (key.b >= 0) {
        term *= Rational(boost::multiprecision::pow(bval, static_cast<unsigned>(key.b)));
      } else {
        term /= Rational(boost::multiprecision::pow(bval, static_cast<unsigned>(-key.b)));
      }
      total += term;
    }
    return total;
  }

  /// Maps this polynomial in n variables into a ring of `total` variables,
  /// sending x_i to x_{offset+i}.
  LaurentPoly embed(std::size_t total, std::size_t offset) const {
    if (offset + n_ > total) throw Error("embed: target ring too small");
    LaurentPoly out(total);
    for (const auto& [key, c] : terms_) {
      MonomialKey k{std::vector<std::uint32_t>(total, 0), key.b};
      std::copy(key.x.begin(), key.x.end(), k.x.begin() + static_cast<std::ptrdiff_t>(offset));
      out.terms_.emplace(std::move(k), c);
    }
    return out;
  }

  /// ASCII form such as "2*x1 + b*x1^2" or "x1^3*x2*b^-1"; "0" for zero.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      std::string body;
      for (std::size_t i = 0; i < key.x.size(); ++i) {
        if (key.x[i] == 0) continue;
        if (!body.empty()) body += '*';
        body += "x" + std::to_string(i + 1);
        if (key.x[i] != 1) body += "^" + std::to_string(key.x[i]);
      }
      if (key.b != 0) {
        if (!body.empty()) body += '*';
        body += "b";
        if (key.b != 1) body += "^" + std::to_string(key.b);
      }
      if (body.empty()) {
        out += mag.str();
      } else if (mag == 1) {
        out += body;
      } else {
        out += mag.str() + "*" + body;
      }
    }
    return out;
  }

 private:
  void require_same_ring(const LaurentPoly& q) const {
    if (n_ != q.n_) throw Error("polynomials live in rings with different variable counts");
  }

  std::size_t n_ = 0;
  TermMap terms_;
};

/// Inverse of LaurentPoly::to_string for a ring of `nvars` variables.
inline LaurentPoly parse_poly(std::string_view text, std::size_t nvars) {
  LaurentPoly out(nvars);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto fail = [&](const char* what) -> void {
    throw Error(std::string("parse_poly: ") + what + " at offset " + std::to_string(pos));
  };
  auto read_int = [&](bool allow_sign) -> std::string {
    std::string digits;
    if (allow_sign && pos < text.size() && text[pos] == '-') digits += text[pos++];
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) digits += text[pos++];
    if (digits.empty() || digits == "-") fail("expected integer");
    return digits;
  };

  skip_ws();
  if (text.substr(pos) == "0") return out;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  while (true) {
    skip_ws();
    BigInt coeff = 1;
    MonomialKey key{std::vector<std::uint32_t>(nvars, 0), 0};
    bool need_factor = true;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = BigInt(read_int(false));
      need_factor = false;
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        need_factor = true;
      }
    }
    while (need_factor) {
      if (pos < text.size() && text[pos] == 'x') {
        ++pos;
        auto idx = std::stoul(read_int(false));
        if (idx < 1 || idx > nvars) fail("variable index out of range");
        std::uint32_t e = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          e = static_cast<std::uint32_t>(std::stoul(read_int(false)));
        }
        key.x[idx - 1] += e;
      } else if (pos < text.size() && text[pos] == 'b') {
        ++pos;
        std::int64_t e = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          e = std::stoll(read_int(true));
        }
        key.b += e;
      } else {
        fail("expected x<i> or b");
      }
      need_factor = pos < text.size() && text[pos] == '*';
      if (need_factor) ++pos;
    }
    out.add_term(std::move(key), negative ? BigInt(-coeff) : coeff);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] == '+') {
      negative = false;
    } else if (text[pos] == '-') {
      negative = true;
    } else {
      fail("expected + or -");
    }
    ++pos;
  }
  return out;
}

/// Hash-based accumulator used when folding many monomials; converts to the
/// ordered representation once at the end.  Merging two accumulators is
/// associative and commutative.
class PolyAccumulator {
 public:
  explicit PolyAccumulator(std::size_t nvars) : n_(nvars) {}

  void add(const MonomialKey& key, const BigInt& c) {
    auto [it, inserted] = acc_.try_emplace(key, c);
    if (!inserted) it->second += c;
  }

  void add(MonomialKey&& key, long c) {
    auto [it, inserted] = acc_.try_emplace(std::move(key), c);
    if (!inserted) it->second += c;
  }

  void merge(const PolyAccumulator& other) {
    for (const auto& [k, c] : other.acc_) add(k, c);
  }

  std::size_t nvars() const noexcept { return n_; }

  LaurentPoly finish() const {
    LaurentPoly out(n_);
    for (const auto& [k, c] : acc_) out.add_term(k, c);
    return out;
  }

 private:
  std::size_t n_;
  std::unordered_map<MonomialKey, BigInt, MonomialKeyHash> acc_;
};

}  // namespace kschur

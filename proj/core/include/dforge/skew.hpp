#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "dforge/errors.hpp"
#include "dforge/gf.hpp"
#include "dforge/ring.hpp"

namespace dforge {

// Twisted polynomial sum a_i tau^i over E with tau b = b^q tau.
template <class E>
class SkewPoly {
 public:
  SkewPoly(E zero, std::uint64_t q) : zero_(std::move(zero)), q_(q) {}
  SkewPoly(E zero, std::uint64_t q, std::vector<E> coeffs)
      : zero_(std::move(zero)), q_(q), c_(std::move(coeffs)) {
    trim();
  }

  static SkewPoly constant(const E& c, std::uint64_t q) { return SkewPoly(c.zero(), q, {c}); }
  static SkewPoly monomial(const E& c, std::size_t k, std::uint64_t q) {
    std::vector<E> v(k + 1, c.zero());
    v[k] = c;
    return SkewPoly(c.zero(), q, std::move(v));
  }

  std::uint64_t q() const noexcept { return q_; }
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  long deg() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<E>& coeffs() const { return c_; }
  const E& coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  const E& leading() const { return c_.empty() ? zero_ : c_.back(); }
  const E& zero_elem() const { return zero_; }

  SkewPoly zero() const { return SkewPoly(zero_, q_); }
  SkewPoly one() const { return SkewPoly(zero_, q_, {zero_.one()}); }

  friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
    check(a, b);
    std::vector<E> r(std::max(a.c_.size(), b.c_.size()), a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return SkewPoly(a.zero_, a.q_, std::move(r));
  }
  SkewPoly operator-() const {
    std::vector<E> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(-x);
    return SkewPoly(zero_, q_, std::move(r));
  }
  friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }
  friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) { return mul_trunc(a, b, SIZE_MAX); }
  friend bool operator==(const SkewPoly& a, const SkewPoly& b) { return a.q_ == b.q_ && a.c_ == b.c_; }

  // Product with every tau-degree above max_deg dropped.
  static SkewPoly mul_trunc(const SkewPoly& a, const SkewPoly& b, std::size_t max_deg) {
    check(a, b);
    if (a.c_.empty() || b.c_.empty()) return SkewPoly(a.zero_, a.q_);
    const std::size_t n = std::min(a.c_.size() + b.c_.size() - 1, max_deg == SIZE_MAX ? SIZE_MAX : max_deg + 1);
    std::vector<E> r(n, a.zero_);
    std::vector<E> bf = b.c_;
    for (std::size_t i = 0; i < a.c_.size() && i < n; ++i) {
      if (i > 0) {
        for (std::size_t j = 0; j < bf.size() && i + j < n; ++j) bf[j] = bf[j].frobenius(a.q_);
      }
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < bf.size() && i + j < n; ++j) r[i + j] = r[i + j] + a.c_[i] * bf[j];
    }
    return SkewPoly(a.zero_, a.q_, std::move(r));
  }

  SkewPoly truncated(std::size_t max_deg) const {
    if (c_.size() <= max_deg + 1) return *this;
    return SkewPoly(zero_, q_, std::vector<E>(c_.begin(), c_.begin() + static_cast<long>(max_deg) + 1));
  }

  // a = quotient * b + remainder with deg remainder < deg b.
  std::pair<SkewPoly, SkewPoly> right_divmod(const SkewPoly& b) const {
    check(*this, b);
    if (b.is_zero()) throw MathError("skew division by zero");
    if (!b.leading().is_unit()) throw MathError("divisor leading coefficient is not a unit");
    const std::size_t db = b.c_.size() - 1;
    SkewPoly r = *this;
    std::vector<E> quot(c_.size() > db ? c_.size() - db : 0, zero_);
    while (!r.is_zero() && r.c_.size() > db) {
      const std::size_t k = r.c_.size() - 1 - db;
      const E c = r.leading() * frobenius_power(b.leading(), q_, static_cast<unsigned>(k)).inv();
      quot[k] = c;
      r = r - monomial(c, k, q_) * b;
      if (r.c_.size() > db + k + 1) throw MathError("skew division failed to cancel the leading term");
    }
    return {SkewPoly(zero_, q_, std::move(quot)), r};
  }

  // sum a_i y^{q^i}, with embed mapping coefficients into y's domain.
  template <class Y, class Embed>
  Y eval(const Y& y, Embed embed) const {
    Y acc = y.zero();
    Y pw = y;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i > 0) pw = pw.frobenius(q_);
      if (!c_[i].is_zero()) acc = acc + embed(c_[i]) * pw;
    }
    return acc;
  }
  E eval(const E& y) const {
    return eval(y, [](const E& c) { return c; });
  }

  template <class F>
  auto map(F fn) const -> SkewPoly<std::invoke_result_t<F, const E&>> {
    using R = std::invoke_result_t<F, const E&>;
    std::vector<R> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(fn(c));
    return SkewPoly<R>(fn(zero_), q_, std::move(out));
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i].to_string();
    os << ']';
    return os.str();
  }

 private:
  static void check(const SkewPoly& a, const SkewPoly& b) {
    if (a.q_ != b.q_) throw MathError("skew polynomials with different twist order");
  }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  E zero_;
  std::uint64_t q_;
  std::vector<E> c_;
};

template <class E>
SkewPoly<E> skew_mul(const SkewPoly<E>& a, const SkewPoly<E>& b) {
  return a * b;
}

template <class E>
std::pair<SkewPoly<E>, SkewPoly<E>> skew_right_divmod(const SkewPoly<E>& a, const SkewPoly<E>& b) {
  return a.right_divmod(b);
}

template <class E>
E skew_eval(const SkewPoly<E>& a, const E& y) {
  return a.eval(y);
}

// Rational kernel points of an additive polynomial over a finite field,
// sorted by encoding.
std::vector<Fe> skew_kernel(const SkewPoly<Fe>& a);
// Same, checking that the coefficient field is F_{q^m}.
std::vector<Fe> skew_kernel(const SkewPoly<Fe>& a, std::uint32_t m);

}  // namespace dforge

namespace dforge {

// Compositional inverse of an additive series s = 1 + s_1 tau + ... up to
// tau-degree d: t_0 = 1, t_n = -sum_{i=1}^{n} s_i t_{n-i}^{q^i}.
template <class E>
SkewPoly<E> skew_series_inverse(const SkewPoly<E>& s, std::size_t d) {
  if (s.is_zero() || !(s.coeff(0) == s.zero_elem().one())) {
    throw MathError("additive series must have constant coefficient 1");
  }
  std::vector<E> t{s.zero_elem().one()};
  for (std::size_t n = 1; n <= d; ++n) {
    E acc = s.zero_elem();
    for (std::size_t i = 1; i <= n; ++i) {
      const E& si = s.coeff(i);
      if (si.is_zero()) continue;
      acc = acc + si * frobenius_power(t[n - i], s.q(), static_cast<unsigned>(i));
    }
    t.push_back(-acc);
  }
  return SkewPoly<E>(s.zero_elem(), s.q(), std::move(t));
}

}  // namespace dforge

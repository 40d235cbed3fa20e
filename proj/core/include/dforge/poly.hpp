#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dforge/errors.hpp"
#include "dforge/ring.hpp"

namespace dforge {

// Dense univariate polynomial, little-endian, over a coefficient domain E.
// The zero polynomial has no degree (std::nullopt stands for -infinity).
template <class E>
class Poly {
 public:
  explicit Poly(E zero) : zero_(std::move(zero)) {}
  Poly(E zero, std::vector<E> coeffs) : zero_(std::move(zero)), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const E& c) { return Poly(c.zero(), {c}); }
  static Poly monomial(const E& c, std::size_t k) {
    std::vector<E> v(k + 1, c.zero());
    v[k] = c;
    return Poly(c.zero(), std::move(v));
  }

  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  // Degree with the zero polynomial mapped to -1, for loop bounds only.
  long deg() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<E>& coeffs() const { return c_; }
  const E& coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  const E& leading() const { return c_.empty() ? zero_ : c_.back(); }
  const E& zero_elem() const { return zero_; }

  Poly zero() const { return Poly(zero_); }
  Poly one() const { return Poly(zero_, {zero_.one()}); }
  bool is_unit() const { return c_.size() == 1 && c_[0].is_unit(); }
  Poly inv() const {
    if (!is_unit()) throw MathError("polynomial is not a unit");
    return Poly(zero_, {c_[0].inv()});
  }
  Poly frobenius(std::uint64_t q) const { return power(*this, q); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<E> r(std::max(a.c_.size(), b.c_.size()), a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return Poly(a.zero_, std::move(r));
  }
  Poly operator-() const {
    std::vector<E> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(-x);
    return Poly(zero_, std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return Poly(a.zero_);
    std::vector<E> r(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(a.zero_, std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly scaled(const E& s) const {
    std::vector<E> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(s * x);
    return Poly(zero_, std::move(r));
  }

  Poly monic() const {
    if (c_.empty()) return *this;
    return scaled(leading().inv());
  }

  E eval(const E& x) const {
    E acc = zero_;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // Evaluate at a point of another domain Y; embed maps E into Y.
  template <class Y, class Embed>
  Y eval_in(const Y& x, Embed embed) const {
    Y acc = x.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + embed(c_[i]);
    return acc;
  }

  // Euclidean division; the divisor's leading coefficient must be a unit.
  std::pair<Poly, Poly> divmod(const Poly& b) const {
    if (b.is_zero()) throw MathError("polynomial division by zero");
    if (!b.leading().is_unit()) throw MathError("divisor leading coefficient is not a unit");
    const E lead_inv = b.leading().inv();
    std::vector<E> r = c_;
    const std::size_t db = b.c_.size() - 1;
    std::vector<E> q(r.size() > db ? r.size() - db : 0, zero_);
    while (r.size() > db) {
      const E t = r.back() * lead_inv;
      const std::size_t shift = r.size() - 1 - db;
      q[shift] = t;
      if (!t.is_zero()) {
        for (std::size_t i = 0; i <= db; ++i) r[shift + i] = r[shift + i] - t * b.c_[i];
      }
      r.pop_back();
    }
    return {Poly(zero_, std::move(q)), Poly(zero_, std::move(r))};
  }

  Poly operator%(const Poly& b) const { return divmod(b).second; }

  // Exact quotient; throws when the division leaves a remainder.
  Poly exact_div(const Poly& b) const {
    auto [q, r] = divmod(b);
    if (!r.is_zero()) throw MathError("inexact polynomial division");
    return q;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i].to_string();
    os << ']';
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  E zero_;
  std::vector<E> c_;
};

// Monic gcd over a field of coefficients.
template <class E>
Poly<E> gcd(Poly<E> a, Poly<E> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace dforge

#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "dforge/errors.hpp"
#include "dforge/ring.hpp"

namespace dforge {

// Truncated Laurent series sum_{k >= lo} c_k x^k + O(x^prec) over E.
// Precision is absolute: coefficients with exponent >= prec are unknown.
// kExact marks a series known exactly (a Laurent polynomial).
template <class E>
class Series {
 public:
  static constexpr long kExact = LONG_MAX / 8;

  explicit Series(E zero, long prec = kExact) : zero_(std::move(zero)), lo_(0), prec_(prec) {}
  Series(E zero, long lo, std::vector<E> coeffs, long prec = kExact)
      : zero_(std::move(zero)), lo_(lo), c_(std::move(coeffs)), prec_(prec) {
    normalise();
  }

  static Series constant(const E& c, long prec = kExact) { return Series(c.zero(), 0, {c}, prec); }
  static Series monomial(const E& c, long k, long prec = kExact) { return Series(c.zero(), k, {c}, prec); }

  long lo() const noexcept { return lo_; }
  long prec() const noexcept { return prec_; }
  bool exact() const noexcept { return prec_ >= kExact; }
  const std::vector<E>& coeffs() const noexcept { return c_; }
  const E& zero_elem() const noexcept { return zero_; }
  // Valuation; a series that vanishes to its precision reports prec.
  long valuation() const noexcept { return c_.empty() ? prec_ : lo_; }
  // One past the largest stored exponent (lo when empty).
  long end() const noexcept { return lo_ + static_cast<long>(c_.size()); }

  const E& coeff(long k) const {
    if (k >= prec_) throw PrecisionError("coefficient of x^" + std::to_string(k) + " beyond precision", k + 1);
    if (k < lo_ || k >= end()) return zero_;
    return c_[static_cast<std::size_t>(k - lo_)];
  }
  const E& lead() const {
    if (c_.empty()) throw PrecisionError("series vanishes to its precision", prec_ + 1);
    return c_.front();
  }

  Series zero() const { return Series(zero_); }
  Series one() const { return constant(zero_.one()); }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_unit() const { return !c_.empty() && c_.front().is_unit(); }

  Series inv() const {
    if (exact()) {
      if (c_.size() == 1 && c_[0].is_unit()) return Series(zero_, -lo_, {c_[0].inv()});
      throw PrecisionError("inverse of an exact series needs a truncation bound");
    }
    return inverse(prec_);
  }

  // Inverse with absolute precision min(prec - 2v, cap).
  Series inverse(long cap) const {
    if (c_.empty()) throw PrecisionError("inverse of a series vanishing to its precision", prec_ + 1);
    if (!c_.front().is_unit()) throw MathError("lowest series coefficient is not a unit");
    const long v = lo_;
    const long out_prec = std::min(exact() ? kExact : prec_ - 2 * v, cap);
    if (out_prec >= kExact) {
      if (c_.size() == 1) return Series(zero_, -v, {c_.front().inv()});
      throw PrecisionError("inverse of an exact series needs a truncation bound");
    }
    const long n = out_prec - (-v);
    if (n <= 0) return Series(zero_, out_prec);
    const E u0 = c_.front().inv();
    std::vector<E> r;
    r.reserve(static_cast<std::size_t>(n));
    r.push_back(u0);
    for (long k = 1; k < n; ++k) {
      E acc = zero_;
      const long top = std::min<long>(k, static_cast<long>(c_.size()) - 1);
      for (long i = 1; i <= top; ++i) {
        const E& ci = c_[static_cast<std::size_t>(i)];
        if (!ci.is_zero()) acc = acc + ci * r[static_cast<std::size_t>(k - i)];
      }
      r.push_back(-(u0 * acc));
    }
    return Series(zero_, -v, std::move(r), out_prec);
  }

  Series frobenius(std::uint64_t q) const {
    const long qq = static_cast<long>(q);
    std::vector<E> r;
    if (!c_.empty()) {
      r.assign((c_.size() - 1) * q + 1, zero_);
      for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) r[i * q] = c_[i].frobenius(q);
      }
    }
    const long p = exact() ? kExact : (prec_ >= 0 ? std::min(prec_ * qq, kExact - 1) : prec_ * qq);
    return Series(zero_, lo_ * qq, std::move(r), p);
  }

  friend Series operator+(const Series& a, const Series& b) {
    const long p = std::min(a.prec_, b.prec_);
    if (a.c_.empty() && a.prec_ >= p) return b.truncated(p);
    if (b.c_.empty() && b.prec_ >= p) return a.truncated(p);
    const long lo = std::min(a.c_.empty() ? b.lo_ : a.lo_, b.c_.empty() ? a.lo_ : b.lo_);
    const long hi = std::min(p, std::max(a.end(), b.end()));
    if (hi <= lo) return Series(a.zero_, p);
    std::vector<E> r(static_cast<std::size_t>(hi - lo), a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      const long k = a.lo_ + static_cast<long>(i);
      if (k < hi) r[static_cast<std::size_t>(k - lo)] = a.c_[i];
    }
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
      const long k = b.lo_ + static_cast<long>(i);
      if (k < hi) r[static_cast<std::size_t>(k - lo)] = r[static_cast<std::size_t>(k - lo)] + b.c_[i];
    }
    return Series(a.zero_, lo, std::move(r), p);
  }
  Series operator-() const {
    std::vector<E> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(-x);
    return Series(zero_, lo_, std::move(r), prec_);
  }
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

  friend Series operator*(const Series& a, const Series& b) {
    const long va = a.valuation();
    const long vb = b.valuation();
    long p = kExact;
    if (!a.exact()) p = std::min(p, a.prec_ + vb);
    if (!b.exact()) p = std::min(p, b.prec_ + va);
    if (a.c_.empty() || b.c_.empty()) return Series(a.zero_, p);
    const long lo = a.lo_ + b.lo_;
    const long hi = std::min(p, a.end() + b.end() - 1);
    if (hi <= lo) return Series(a.zero_, p);
    std::vector<E> r(static_cast<std::size_t>(hi - lo), a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      const long ki = a.lo_ + static_cast<long>(i);
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        const long k = ki + b.lo_ + static_cast<long>(j);
        if (k >= hi) break;
        if (!b.c_[j].is_zero()) r[static_cast<std::size_t>(k - lo)] = r[static_cast<std::size_t>(k - lo)] + a.c_[i] * b.c_[j];
      }
    }
    return Series(a.zero_, lo, std::move(r), p);
  }

  // Agreement up to the common precision.
  friend bool operator==(const Series& a, const Series& b) { return (a - b).is_zero(); }

  Series truncated(long p) const {
    if (p >= prec_) return *this;
    Series s = *this;
    s.prec_ = p;
    s.normalise();
    return s;
  }
  Series shifted(long k) const { return Series(zero_, lo_ + k, c_, exact() ? kExact : prec_ + k); }
  Series scaled(const E& s) const {
    std::vector<E> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(s * x);
    return Series(zero_, lo_, std::move(r), prec_);
  }

  template <class F>
  auto map(F fn) const -> Series<std::invoke_result_t<F, const E&>> {
    using R = std::invoke_result_t<F, const E&>;
    std::vector<R> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(fn(x));
    return Series<R>(fn(zero_), lo_, std::move(r), prec_);
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "x^" << lo_ << "*[";
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i].to_string();
    os << "]";
    if (!exact()) os << "+O(x^" << prec_ << ")";
    return os.str();
  }

 private:
  void normalise() {
    if (!exact() && end() > prec_) {
      const long keep = std::max<long>(0, prec_ - lo_);
      c_.resize(static_cast<std::size_t>(keep), zero_);
    }
    std::size_t first = 0;
    while (first < c_.size() && c_[first].is_zero()) ++first;
    if (first == c_.size()) {
      c_.clear();
      lo_ = 0;
      return;
    }
    if (first > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(first));
      lo_ += static_cast<long>(first);
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  E zero_;
  long lo_;
  std::vector<E> c_;
  long prec_;
};

// Multiplicative inverse with absolute precision bound for exact input.
template <class E>
Series<E> series_invert(const Series<E>& s, long cap = Series<E>::kExact) {
  return s.inverse(cap);
}

}  // namespace dforge

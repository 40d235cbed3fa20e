#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "dforge/polya.hpp"

namespace dforge {

// Element of F_q(T): reduced fraction with monic denominator.
class RatFunc {
 public:
  explicit RatFunc(PolyA num);
  RatFunc(PolyA num, PolyA den);

  static RatFunc from_index(const FieldPtr& fq, std::uint32_t idx) { return RatFunc(polya_const(fq, idx)); }
  // num / f^k.
  static RatFunc from_af(const PolyA& num, const PolyA& f, long k);

  const PolyA& num() const noexcept { return num_; }
  const PolyA& den() const noexcept { return den_; }
  const FieldPtr& base() const noexcept { return num_.zero_elem().field(); }

  RatFunc zero() const { return RatFunc(num_.zero()); }
  RatFunc one() const { return RatFunc(num_.one()); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_unit() const noexcept { return !num_.is_zero(); }
  RatFunc inv() const;
  RatFunc frobenius(std::uint64_t q) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const { return RatFunc(-num_, den_, true); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  // Writes the element as num / f^k with k >= 0 minimal (f taken monic).
  // Throws MathError when the denominator is not a power of f up to a
  // unit of A_f.
  std::pair<PolyA, long> to_af(const PolyA& f) const;

  // Value at T = t for t in an extension field; embed maps F_q into it.
  template <class Embed>
  Fe eval_at(const Fe& t, Embed embed) const {
    const Fe d = den_.eval_in(t, embed);
    if (d.is_zero()) throw MathError("rational function has a pole at the specialisation point");
    return num_.eval_in(t, embed) * d.inv();
  }

  std::string to_string() const;

 private:
  RatFunc(PolyA num, PolyA den, bool /*reduced*/) : num_(std::move(num)), den_(std::move(den)) {}
  void normalise();

  PolyA num_;
  PolyA den_;
};

}  // namespace dforge

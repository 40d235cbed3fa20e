#include "dforge/ratfunc.hpp"

namespace dforge {

RatFunc::RatFunc(PolyA num) : num_(std::move(num)), den_(num_.one()) {}

RatFunc::RatFunc(PolyA num, PolyA den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw MathError("zero denominator");
  normalise();
}

void RatFunc::normalise() {
  if (num_.is_zero()) {
    den_ = num_.one();
    return;
  }
  const PolyA g = gcd(num_, den_);
  if (g.deg() > 0) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  const Fe lead = den_.leading();
  if (!(lead == lead.one())) {
    const Fe li = lead.inv();
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }
}

RatFunc RatFunc::from_af(const PolyA& num, const PolyA& f, long k) {
  const PolyA fm = f.monic();
  PolyA p = num.one();
  for (long i = 0; i < (k < 0 ? -k : k); ++i) p = p * fm;
  return k >= 0 ? RatFunc(num, p) : RatFunc(num * p);
}

RatFunc RatFunc::inv() const {
  if (num_.is_zero()) throw MathError("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::frobenius(std::uint64_t q) const {
  // In characteristic p the q-power acts coefficientwise on T-powers.
  auto frob = [q](const PolyA& a) {
    if (a.is_zero()) return a;
    std::vector<Fe> c(static_cast<std::size_t>(a.deg()) * q + 1, a.zero_elem());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i * q] = a.coeffs()[i].pow(q);
    return PolyA(a.zero_elem(), std::move(c));
  };
  return RatFunc(frob(num_), frob(den_), true);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return a.zero();
  if (a.den_.deg() == 0 && b.den_.deg() == 0) return RatFunc(a.num_ * b.num_, a.den_, true);
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

std::pair<PolyA, long> RatFunc::to_af(const PolyA& f) const {
  const PolyA fm = f.monic();
  PolyA d = den_;
  PolyA fk = num_.one();
  long k = 0;
  // Multiply numerator and denominator until the denominator is f^k.
  while (!(d == fk)) {
    if (d.deg() > 0 && fk.deg() > 4 * d.deg() + 4 * fm.deg()) {
      throw MathError("denominator " + den_.to_string() + " is not a power of f");
    }
    fk = fk * fm;
    ++k;
    if ((fk % d).is_zero()) {
      const PolyA c = fk.exact_div(d);
      return {num_ * c, k};
    }
  }
  return {num_, k};
}

std::string RatFunc::to_string() const {
  if (den_.deg() == 0) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace dforge

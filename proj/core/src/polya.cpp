#include "dforge/polya.hpp"

#include <numeric>

namespace dforge {

PolyA polya_from_indices(const FieldPtr& fq, const std::vector<std::uint32_t>& idx) {
  std::vector<Fe> c;
  c.reserve(idx.size());
  for (auto i : idx) {
    if (i >= fq->size()) throw ConfigError("coefficient index out of range for F_q");
    c.emplace_back(fq, i);
  }
  return PolyA(Fe(fq, 0), std::move(c));
}

std::vector<std::uint32_t> polya_indices(const PolyA& a) {
  std::vector<std::uint32_t> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) out.push_back(c.index());
  return out;
}

PolyA polya_T(const FieldPtr& fq) { return polya_from_indices(fq, {0, 1}); }

PolyA polya_const(const FieldPtr& fq, std::uint32_t idx) { return polya_from_indices(fq, {idx}); }

namespace {

// Monic polynomials of exact degree d, in encoding order.
std::vector<PolyA> monics_of_degree(const FieldPtr& fq, std::size_t d) {
  const std::uint32_t q = fq->size();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < d; ++i) count *= q;
  std::vector<PolyA> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    std::vector<std::uint32_t> idx(d + 1, 0);
    std::uint64_t r = k;
    for (std::size_t i = 0; i < d; ++i) {
      idx[i] = static_cast<std::uint32_t>(r % q);
      r /= q;
    }
    idx[d] = 1;
    out.push_back(polya_from_indices(fq, idx));
  }
  return out;
}

}  // namespace

std::vector<PolyA> prime_factors(const PolyA& f) {
  if (f.is_zero()) throw MathError("zero polynomial has no factorisation");
  const FieldPtr fq = f.zero_elem().field();
  PolyA rest = f.monic();
  std::vector<PolyA> out;
  for (std::size_t d = 1; rest.deg() > 0 && 2 * d <= static_cast<std::size_t>(rest.deg()); ++d) {
    for (const auto& p : monics_of_degree(fq, d)) {
      if (!(rest % p).is_zero()) continue;
      out.push_back(p);
      while ((rest % p).is_zero()) rest = rest.exact_div(p);
    }
  }
  if (rest.deg() > 0) out.push_back(rest);
  return out;
}

ResidueRing::ResidueRing(const PolyA& f) : f_(f.monic()), fq_(f.zero_elem().field()), q_(0) {
  if (f.is_zero() || f.deg() < 1) throw MathError("modulus must be a nonzero non-unit");
  q_ = fq_->size();
  deg_ = static_cast<std::uint32_t>(f_.deg());
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < deg_; ++i) size *= q_;
  if (size > (1ULL << 24)) throw ConfigError("residue ring too large");
  size_ = static_cast<std::uint32_t>(size);

  unit_.assign(size_, false);
  inv_.assign(size_, 0);
  for (std::uint32_t a = 1; a < size_; ++a) {
    if (gcd(element(a), f_).deg() == 0) {
      unit_[a] = true;
      units_.push_back(a);
    }
  }
  if (size_ <= 729) {
    mul_.resize(static_cast<std::size_t>(size_) * size_);
    std::vector<PolyA> el;
    el.reserve(size_);
    for (std::uint32_t a = 0; a < size_; ++a) el.push_back(element(a));
    for (std::uint32_t a = 0; a < size_; ++a) {
      for (std::uint32_t b = a; b < size_; ++b) {
        const auto v = index_of(el[a] * el[b]);
        mul_[static_cast<std::size_t>(a) * size_ + b] = v;
        mul_[static_cast<std::size_t>(b) * size_ + a] = v;
      }
    }
  }
  if (mul_.empty()) return;
  for (auto a : units_) {
    for (auto b : units_) {
      if (mul(a, b) == 1) {
        inv_[a] = b;
        break;
      }
    }
  }
}

PolyA ResidueRing::element(std::uint32_t idx) const {
  std::vector<std::uint32_t> c(deg_, 0);
  for (std::uint32_t i = 0; i < deg_; ++i) {
    c[i] = static_cast<std::uint32_t>(idx % q_);
    idx = static_cast<std::uint32_t>(idx / q_);
  }
  return polya_from_indices(fq_, c);
}

std::uint32_t ResidueRing::index_of(const PolyA& r) const {
  const PolyA red = r % f_;
  std::uint64_t idx = 0;
  for (std::size_t i = red.coeffs().size(); i-- > 0;) idx = idx * q_ + red.coeffs()[i].index();
  return static_cast<std::uint32_t>(idx);
}

std::uint32_t ResidueRing::add(std::uint32_t a, std::uint32_t b) const {
  std::uint64_t out = 0;
  std::uint64_t scale = 1;
  for (std::uint32_t i = 0; i < deg_; ++i) {
    const auto da = static_cast<std::uint32_t>(a % q_);
    const auto db = static_cast<std::uint32_t>(b % q_);
    out += scale * fq_->add(da, db);
    a = static_cast<std::uint32_t>(a / q_);
    b = static_cast<std::uint32_t>(b / q_);
    scale *= q_;
  }
  return static_cast<std::uint32_t>(out);
}

std::uint32_t ResidueRing::neg(std::uint32_t a) const {
  std::uint64_t out = 0;
  std::uint64_t scale = 1;
  for (std::uint32_t i = 0; i < deg_; ++i) {
    out += scale * fq_->neg(static_cast<std::uint32_t>(a % q_));
    a = static_cast<std::uint32_t>(a / q_);
    scale *= q_;
  }
  return static_cast<std::uint32_t>(out);
}

std::uint32_t ResidueRing::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t ResidueRing::mul(std::uint32_t a, std::uint32_t b) const {
  if (!mul_.empty()) return mul_[static_cast<std::size_t>(a) * size_ + b];
  return index_of(element(a) * element(b));
}

std::uint32_t ResidueRing::inv(std::uint32_t a) const {
  if (!unit_.at(a)) throw MathError("residue class is not a unit");
  if (!mul_.empty()) return inv_[a];
  std::uint64_t e = units_.size() - 1;
  std::uint32_t base = a;
  std::uint32_t acc = 1;
  while (e != 0) {
    if ((e & 1U) != 0) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return acc;
}

std::vector<PolyA> residue_units(const PolyA& f) {
  if (f.is_zero() || f.deg() < 1) throw MathError("f must be a nonzero non-constant polynomial");
  ResidueRing r(f);
  std::vector<PolyA> out;
  out.reserve(r.units().size());
  for (auto u : r.units()) out.push_back(r.element(u));
  return out;
}

}  // namespace dforge

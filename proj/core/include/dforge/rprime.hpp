#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dforge/ratfunc.hpp"

namespace dforge {

// Presentation of R' = A_f[lambda]/(Phi(lambda)) for a monic Phi over A.
// Arithmetic runs in the fraction field F_q(T)[lambda]/(Phi), which is a
// field because Phi is irreducible; membership in R' is a check on
// denominators (see RPrime::in_af_lattice).
struct RPrimeCtx {
  PolyA f;                  // monic
  std::uint64_t q = 0;
  std::vector<RatFunc> phi;  // little-endian, monic, degree n
  std::size_t n() const { return phi.size() - 1; }
  const FieldPtr& base() const { return f.zero_elem().field(); }
};
using RPrimeCtxPtr = std::shared_ptr<const RPrimeCtx>;

RPrimeCtxPtr rprime_context(const PolyA& f, std::uint64_t q, const std::vector<PolyA>& phi);

class RPrime {
 public:
  RPrime(RPrimeCtxPtr ctx, std::vector<RatFunc> coeffs);
  static RPrime from_ratfunc(const RPrimeCtxPtr& ctx, const RatFunc& a);
  static RPrime from_polya(const RPrimeCtxPtr& ctx, const PolyA& a) { return from_ratfunc(ctx, RatFunc(a)); }
  static RPrime lambda(const RPrimeCtxPtr& ctx);

  const RPrimeCtxPtr& ctx() const noexcept { return ctx_; }
  const std::vector<RatFunc>& coeffs() const noexcept { return c_; }

  RPrime zero() const;
  RPrime one() const;
  bool is_zero() const;
  // Unit of R': nonzero with inverse whose denominators are f-powers.
  bool is_unit() const;
  RPrime inv() const;
  RPrime frobenius(std::uint64_t q) const { return power(*this, q); }

  friend RPrime operator+(const RPrime& a, const RPrime& b);
  friend RPrime operator-(const RPrime& a, const RPrime& b);
  friend RPrime operator*(const RPrime& a, const RPrime& b);
  RPrime operator-() const;
  friend bool operator==(const RPrime& a, const RPrime& b) { return a.c_ == b.c_; }

  // True when every coordinate is in A_f (denominator a power of f).
  bool in_af_lattice() const;
  // True when only the lambda^i with (q-1) | i occur.
  bool in_subring() const;

  // sum c_i(g) g'^i: applies the F_q(T)-algebra map lambda -> image.
  RPrime substitute(const RPrime& image) const;

  // Value at T = t, lambda = lam for t, lam in a finite extension of F_q.
  template <class Embed>
  Fe specialise(const Fe& t, const Fe& lam, Embed embed) const {
    Fe acc = t.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lam + c_[i].eval_at(t, embed);
    return acc;
  }

  std::string to_string() const;

 private:
  RPrimeCtxPtr ctx_;
  std::vector<RatFunc> c_;
};

}  // namespace dforge

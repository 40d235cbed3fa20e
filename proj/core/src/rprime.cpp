#include "dforge/rprime.hpp"

#include <sstream>

namespace dforge {

RPrimeCtxPtr rprime_context(const PolyA& f, std::uint64_t q, const std::vector<PolyA>& phi) {
  if (phi.size() < 2) throw MathError("defining polynomial must have positive degree");
  if (!(phi.back() == phi.back().one())) throw MathError("defining polynomial must be monic");
  std::vector<RatFunc> coeffs;
  for (const auto& c : phi) coeffs.emplace_back(c);
  return std::make_shared<const RPrimeCtx>(RPrimeCtx{f.monic(), q, std::move(coeffs)});
}

RPrime::RPrime(RPrimeCtxPtr ctx, std::vector<RatFunc> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  const RatFunc z = RatFunc(ctx_->f.zero());
  if (c_.size() > ctx_->n()) {
    // Reduce modulo the monic defining polynomial.
    for (std::size_t k = c_.size(); k-- > ctx_->n();) {
      const RatFunc t = c_[k];
      if (t.is_zero()) continue;
      const std::size_t s = k - ctx_->n();
      for (std::size_t i = 0; i < ctx_->n(); ++i) {
        if (!ctx_->phi[i].is_zero()) c_[s + i] = c_[s + i] - t * ctx_->phi[i];
      }
    }
    c_.resize(ctx_->n(), z);
  }
  c_.resize(ctx_->n(), z);
}

RPrime RPrime::from_ratfunc(const RPrimeCtxPtr& ctx, const RatFunc& a) {
  std::vector<RatFunc> c(ctx->n(), a.zero());
  c[0] = a;
  return {ctx, std::move(c)};
}

RPrime RPrime::lambda(const RPrimeCtxPtr& ctx) {
  const RatFunc z = RatFunc(ctx->f.zero());
  std::vector<RatFunc> c(ctx->n() + 1, z);
  c[1] = z.one();
  return {ctx, std::move(c)};
}

RPrime RPrime::zero() const { return from_ratfunc(ctx_, RatFunc(ctx_->f.zero())); }
RPrime RPrime::one() const { return from_ratfunc(ctx_, RatFunc(ctx_->f.one())); }

bool RPrime::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

RPrime operator+(const RPrime& a, const RPrime& b) {
  std::vector<RatFunc> c = a.c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] + b.c_[i];
  return {a.ctx_, std::move(c)};
}

RPrime operator-(const RPrime& a, const RPrime& b) {
  std::vector<RatFunc> c = a.c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] - b.c_[i];
  return {a.ctx_, std::move(c)};
}

RPrime RPrime::operator-() const {
  std::vector<RatFunc> c = c_;
  for (auto& x : c) x = -x;
  return {ctx_, std::move(c)};
}

RPrime operator*(const RPrime& a, const RPrime& b) {
  const std::size_t n = a.c_.size();
  std::vector<RatFunc> c(2 * n - 1, a.c_[0].zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!b.c_[j].is_zero()) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
  }
  return {a.ctx_, std::move(c)};
}

RPrime RPrime::inv() const {
  const std::size_t n = c_.size();
  if (is_zero()) throw MathError("inverse of zero in R'");
  // Solve M y = e_0 where column j of M is this * lambda^j.
  std::vector<std::vector<RatFunc>> m(n, std::vector<RatFunc>(n + 1, c_[0].zero()));
  RPrime col = *this;
  const RPrime lam = lambda(ctx_);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.c_[i];
    col = col * lam;
  }
  m[0][n] = c_[0].one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) throw MathError("element of R' is a zero divisor");
    std::swap(m[c], m[piv]);
    const RatFunc iv = m[c][c].inv();
    for (auto& x : m[c]) x = x * iv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const RatFunc t = m[r][c];
      for (std::size_t k = c; k <= n; ++k) m[r][k] = m[r][k] - t * m[c][k];
    }
  }
  std::vector<RatFunc> y;
  y.reserve(n);
  for (std::size_t i = 0; i < n; ++i) y.push_back(m[i][n]);
  return {ctx_, std::move(y)};
}

bool RPrime::in_af_lattice() const {
  for (const auto& c : c_) {
    try {
      (void)c.to_af(ctx_->f);
    } catch (const MathError&) {
      return false;
    }
  }
  return true;
}

bool RPrime::is_unit() const {
  if (is_zero()) return false;
  return in_af_lattice() && inv().in_af_lattice();
}

bool RPrime::in_subring() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i % (ctx_->q - 1) != 0 && !c_[i].is_zero()) return false;
  }
  return true;
}

RPrime RPrime::substitute(const RPrime& image) const {
  RPrime acc = zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * image + from_ratfunc(ctx_, c_[i]);
  return acc;
}

std::string RPrime::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i].to_string();
  os << '}';
  return os.str();
}

}  // namespace dforge

#include "dforge/gf.hpp"

#include <algorithm>

#include "dforge/config.hpp"

namespace dforge {

namespace {

constexpr std::uint32_t kNoLog = 0xFFFFFFFFU;

// Remainder of a by monic b over F_p; both little-endian.
std::vector<std::uint32_t> rem_mod_p(std::uint32_t p, std::vector<std::uint32_t> a,
                                     const std::vector<std::uint32_t>& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  if (poly.size() < 2 || poly.back() == 0) return false;
  const std::size_t d = poly.size() - 1;
  for (std::size_t k = 1; 2 * k <= d; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      std::vector<std::uint32_t> g(k + 1, 0);
      std::uint64_t t = c;
      for (std::size_t i = 0; i < k; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      g[k] = 1;
      const auto r = rem_mod_p(p, poly, g);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; })) return false;
    }
  }
  return true;
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t n,
                                         std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw ConfigError("characteristic " + std::to_string(p) + " is not prime");
  if (n == 0) throw ConfigError("field degree must be positive");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    size *= p;
    if (size > max_field_size()) {
      throw ConfigError("field size " + std::to_string(p) + "^" + std::to_string(n) +
                        " exceeds bound " + std::to_string(max_field_size()));
    }
  }
  std::vector<std::uint32_t> mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != n + 1 || mod.back() != 1) {
      throw ConfigError("modulus must be monic of degree " + std::to_string(n));
    }
    for (auto c : mod) {
      if (c >= p) throw ConfigError("modulus coefficient out of range");
    }
    if (!is_irreducible_mod_p(p, mod)) throw ConfigError("reducible modulus supplied");
  } else {
    for (std::uint64_t c = 0; c < size; ++c) {
      std::vector<std::uint32_t> cand(n + 1, 0);
      std::uint64_t t = c;
      for (std::uint32_t i = 0; i < n; ++i) {
        cand[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      cand[n] = 1;
      if (is_irreducible_mod_p(p, cand)) {
        mod = std::move(cand);
        break;
      }
    }
  }
  return std::shared_ptr<const Field>(new Field(p, n, std::move(mod)));
}

Field::Field(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus)
    : p_(p), n_(n), size_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < n; ++i) size_ *= p;
  const std::uint32_t order = size_ - 1;
  exp_.assign(order, 0);
  log_.assign(size_, kNoLog);
  if (size_ == 2) {
    exp_[0] = 1;
  } else {
    for (std::uint32_t g = 2; g < size_; ++g) {
      std::uint32_t x = 1;
      std::uint32_t k = 0;
      bool ok = true;
      do {
        if (k >= order) {
          ok = false;
          break;
        }
        exp_[k++] = x;
        x = poly_mul(x, g);
      } while (x != 1);
      if (ok && k == order) break;
    }
  }
  for (std::uint32_t k = 0; k < order; ++k) log_[exp_[k]] = k;
  zech_.assign(order, kNoLog);
  for (std::uint32_t k = 0; k < order; ++k) {
    auto d = digits(exp_[k]);
    d[0] = (d[0] + 1) % p_;
    const std::uint32_t s = from_digits(d);
    zech_[k] = s == 0 ? kNoLog : log_[s];
  }
  log_minus_one_ = log_[from_int(-1)];
}

std::vector<std::uint32_t> Field::digits(std::uint32_t a) const {
  std::vector<std::uint32_t> d(n_, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

std::uint32_t Field::from_digits(const std::vector<std::uint32_t>& d) const {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
  return v;
}

std::uint32_t Field::poly_mul(std::uint32_t a, std::uint32_t b) const {
  const auto da = digits(a);
  const auto db = digits(b);
  std::vector<std::uint32_t> prod(2 * n_ - 1, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  auto r = rem_mod_p(p_, prod, modulus_);
  r.resize(n_, 0);
  return from_digits(r);
}

std::uint32_t Field::from_int(std::int64_t k) const {
  const std::int64_t pp = p_;
  return static_cast<std::uint32_t>(((k % pp) + pp) % pp);
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t order = size_ - 1;
  const std::uint32_t la = log_[a];
  const std::uint32_t lb = log_[b];
  const std::uint32_t d = (lb + order - la) % order;
  const std::uint32_t z = zech_[d];
  if (z == kNoLog) return 0;
  return exp_[(static_cast<std::uint64_t>(la) + z) % order];
}

std::uint32_t Field::neg(std::uint32_t a) const {
  if (a == 0 || p_ == 2) return a;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_minus_one_) % (size_ - 1)];
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (size_ - 1)];
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw MathError("inverse of zero in F_" + std::to_string(size_));
  const std::uint32_t order = size_ - 1;
  return exp_[(order - log_[a]) % order];
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = size_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % order)) % order];
}

std::vector<std::uint32_t> Field::embedding_from(const Field& sub) const {
  if (sub.p_ != p_ || n_ % sub.n_ != 0) {
    throw ConfigError("F_" + std::to_string(sub.size_) + " is not a subfield of F_" +
                      std::to_string(size_));
  }
  std::uint32_t root = 0;
  bool found = false;
  for (std::uint32_t r = 0; r < size_ && !found; ++r) {
    std::uint32_t acc = 0;
    for (std::size_t i = sub.modulus_.size(); i-- > 0;) {
      acc = add(mul(acc, r), from_int(sub.modulus_[i]));
    }
    if (acc == 0) {
      root = r;
      found = true;
    }
  }
  if (!found) throw MathError("subfield modulus has no root");
  std::vector<std::uint32_t> map(sub.size_, 0);
  for (std::uint32_t idx = 0; idx < sub.size_; ++idx) {
    const auto d = sub.digits(idx);
    std::uint32_t acc = 0;
    for (std::size_t i = d.size(); i-- > 0;) acc = add(mul(acc, root), from_int(d[i]));
    map[idx] = acc;
  }
  return map;
}

Fe Fe::inv() const {
  if (v_ == 0) throw MathError("inverse of zero field element");
  return {field_, field_->inv(v_)};
}

Tower field_make(std::uint32_t p, std::uint32_t e, std::uint32_t m) {
  if (m == 0) throw ConfigError("extension degree must be positive");
  Tower t;
  t.base = Field::make(p, e);
  t.ext = m == 1 ? t.base : Field::make(p, e * m);
  t.q = t.base->size();
  t.m = m;
  if (m == 1) {
    t.embed.resize(t.base->size());
    for (std::uint32_t i = 0; i < t.base->size(); ++i) t.embed[i] = i;
  } else {
    t.embed = t.ext->embedding_from(*t.base);
  }
  return t;
}

}  // namespace dforge

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dforge/errors.hpp"

namespace dforge {

bool is_prime(std::uint64_t n);

// The finite field F_{p^n} = F_p[x]/(modulus). Elements are encoded as
// integers sum c_i p^i over the power basis 1, x, ..., x^{n-1}; arithmetic
// goes through log/Zech tables built once at construction.
class Field {
 public:
  // modulus: little-endian monic coefficient list of length n+1 over F_p.
  // Without one, the least monic irreducible polynomial (ordered by its
  // encoding) is used.
  static std::shared_ptr<const Field> make(
      std::uint32_t p, std::uint32_t n,
      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return n_; }
  std::uint32_t size() const noexcept { return size_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  std::uint32_t generator() const noexcept { return exp_[size_ > 2 ? 1 : 0]; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t from_int(std::int64_t k) const;

  // Discrete log with respect to generator(); a must be nonzero.
  std::uint32_t log(std::uint32_t a) const { return log_[a]; }
  std::uint32_t exp(std::uint64_t k) const { return exp_[k % (size_ - 1)]; }

  std::vector<std::uint32_t> digits(std::uint32_t a) const;
  std::uint32_t from_digits(const std::vector<std::uint32_t>& d) const;

  // Index map sub -> this for a subfield of matching characteristic whose
  // degree divides ours. The image of x is the least root of sub's modulus.
  std::vector<std::uint32_t> embedding_from(const Field& sub) const;

  bool same_as(const Field& other) const noexcept {
    return p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_;
  }

 private:
  Field(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus);
  std::uint32_t poly_mul(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_;
  std::uint32_t n_;
  std::uint32_t size_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;
  std::uint32_t log_minus_one_ = 0;
};

using FieldPtr = std::shared_ptr<const Field>;

// Monic irreducibility over F_p by trial division (desk-scale degrees).
bool is_irreducible_mod_p(std::uint32_t p, const std::vector<std::uint32_t>& poly);

// Element of a finite field, carrying its field.
class Fe {
 public:
  Fe() = default;
  Fe(FieldPtr field, std::uint32_t index) : field_(std::move(field)), v_(index) {}

  const FieldPtr& field() const noexcept { return field_; }
  std::uint32_t index() const noexcept { return v_; }

  Fe zero() const { return {field_, 0}; }
  Fe one() const { return {field_, 1}; }
  bool is_zero() const noexcept { return v_ == 0; }
  bool is_unit() const noexcept { return v_ != 0; }
  Fe inv() const;
  Fe frobenius(std::uint64_t q) const { return {field_, field_->pow(v_, q)}; }
  Fe pow(std::uint64_t e) const { return {field_, field_->pow(v_, e)}; }

  friend Fe operator+(const Fe& a, const Fe& b) { return {a.field_, a.field_->add(a.v_, b.v_)}; }
  friend Fe operator-(const Fe& a, const Fe& b) { return {a.field_, a.field_->sub(a.v_, b.v_)}; }
  friend Fe operator*(const Fe& a, const Fe& b) { return {a.field_, a.field_->mul(a.v_, b.v_)}; }
  Fe operator-() const { return {field_, field_->neg(v_)}; }
  friend bool operator==(const Fe& a, const Fe& b) { return a.v_ == b.v_; }
  friend bool operator<(const Fe& a, const Fe& b) { return a.v_ < b.v_; }

  std::string to_string() const { return std::to_string(v_); }

 private:
  FieldPtr field_;
  std::uint32_t v_ = 0;
};

// F_q together with an extension F_{q^m} and the embedding between them.
struct Tower {
  FieldPtr base;       // F_q, q = p^e
  FieldPtr ext;        // F_{q^m}
  std::uint64_t q = 0;
  std::uint32_t m = 1;
  std::vector<std::uint32_t> embed;  // base index -> ext index

  Fe lift(const Fe& a) const { return {ext, embed.at(a.index())}; }
};

Tower field_make(std::uint32_t p, std::uint32_t e, std::uint32_t m);

}  // namespace dforge

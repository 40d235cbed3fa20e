#pragma once

#include <cstdint>
#include <vector>

#include "dforge/gf.hpp"
#include "dforge/poly.hpp"

namespace dforge {

// A = F_q[T].
using PolyA = Poly<Fe>;

PolyA polya_from_indices(const FieldPtr& fq, const std::vector<std::uint32_t>& idx);
std::vector<std::uint32_t> polya_indices(const PolyA& a);
PolyA polya_T(const FieldPtr& fq);
PolyA polya_const(const FieldPtr& fq, std::uint32_t idx);

// char_eval: the image a(theta) of a in an F_q-algebra K, given the
// structure map F_q -> K.
template <class K, class Embed>
K char_eval(const PolyA& a, const K& theta, Embed embed) {
  return a.eval_in(theta, embed);
}

// Monic irreducible factors of f (trial division; desk-scale degrees).
std::vector<PolyA> prime_factors(const PolyA& f);

// A/fA with elements enumerated by index sum c_i q^i over the residues
// c_0 + c_1 T + ... of degree < deg f.
class ResidueRing {
 public:
  explicit ResidueRing(const PolyA& f);

  const PolyA& modulus() const noexcept { return f_; }
  const FieldPtr& base() const noexcept { return fq_; }
  std::uint64_t q() const noexcept { return q_; }
  std::uint32_t size() const noexcept { return size_; }

  PolyA element(std::uint32_t idx) const;
  std::uint32_t index_of(const PolyA& r) const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  bool is_unit(std::uint32_t a) const { return unit_[a]; }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t one() const noexcept { return 1; }
  // Residues lying in the constant subfield F_q (index < q).
  bool is_scalar(std::uint32_t a) const noexcept { return a < q_; }

  const std::vector<std::uint32_t>& units() const noexcept { return units_; }

 private:
  PolyA f_;
  FieldPtr fq_;
  std::uint64_t q_;
  std::uint32_t size_;
  std::uint32_t deg_;
  std::vector<std::uint32_t> mul_;  // size_ x size_ table
  std::vector<bool> unit_;
  std::vector<std::uint32_t> units_;
  std::vector<std::uint32_t> inv_;
};

// Ordered list of the unit classes of A/fA.
std::vector<PolyA> residue_units(const PolyA& f);

}  // namespace dforge

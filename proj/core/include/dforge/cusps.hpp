#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dforge/polya.hpp"

namespace dforge {

// 2x2 matrix over A/fA, row-major, entries are residue indices.
struct Mat2 {
  std::uint32_t a = 0, b = 0, c = 0, d = 0;
  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend auto operator<=>(const Mat2&, const Mat2&) = default;
  std::vector<std::uint32_t> entries() const { return {a, b, c, d}; }
};

class MatrixRing {
 public:
  explicit MatrixRing(const PolyA& f);

  const ResidueRing& ring() const noexcept { return r_; }
  std::uint64_t q() const noexcept { return r_.q(); }
  std::uint32_t order() const noexcept { return r_.size(); }  // Q

  Mat2 identity() const { return {1, 0, 0, 1}; }
  Mat2 mul(const Mat2& x, const Mat2& y) const;
  std::uint32_t det(const Mat2& x) const;
  bool invertible(const Mat2& x) const { return r_.is_unit(det(x)); }
  Mat2 inv(const Mat2& x) const;
  Mat2 diag(std::uint32_t x, std::uint32_t y) const { return {x, 0, 0, y}; }

  // Encoding order: lexicographic in (a, b, c, d).
  std::uint64_t encode(const Mat2& x) const;
  Mat2 decode(std::uint64_t k) const;

  bool in_N(const Mat2& x) const { return x.c == 0 && x.a != 0 && r_.is_scalar(x.a) && r_.is_unit(x.d); }
  bool in_H(const Mat2& x) const { return x.c == 0 && r_.is_unit(x.a) && r_.is_unit(x.d); }
  bool in_Sl2(const Mat2& x) const { return det(x) == 1; }
  bool in_Sigma(const Mat2& x) const {
    const auto d = det(x);
    return d != 0 && r_.is_scalar(d);
  }

  // Small generating sets.
  std::vector<std::uint32_t> unit_generators() const;
  std::vector<std::uint32_t> additive_generators() const;
  std::vector<Mat2> gl2_generators() const;
  std::vector<Mat2> h_generators() const;

 private:
  ResidueRing r_;
};

// Gl_2(A/fA), materialised (Q <= 27).
struct Gl2Group {
  std::shared_ptr<const MatrixRing> ring;
  std::vector<Mat2> elements;  // in encoding order
};

constexpr std::uint32_t kMaterialiseBound = 27;
constexpr std::uint32_t kEnumerateBound = 81;

Gl2Group gl2_enum(const PolyA& f);

struct Subgroups {
  std::vector<Mat2> N, H, Sigma, Sl2;
};
Subgroups subgroups(const Gl2Group& g);

// Right cosets N g (the quotient N\Gl_2) or left cosets g N.
enum class CosetSide { Right, Left };

// Representatives with sigma_1 = identity, all in Sl_2: the least element
// of each coset, moved into Sl_2 by diag(1, det^{-1}).
std::vector<Mat2> coset_reps(const Gl2Group& g, CosetSide side = CosetSide::Right);
// Index i of the coset containing x.
std::size_t coset_locate(const MatrixRing& m, const std::vector<Mat2>& reps, const Mat2& x,
                         CosetSide side = CosetSide::Right);

struct CensusReport {
  std::uint64_t q = 0;
  std::uint32_t Q = 0;
  std::uint64_t h = 1;
  std::uint64_t units = 0;
  std::uint64_t gl2_order = 0;
  std::uint64_t sl2_order = 0;
  std::uint64_t n_order = 0;
  std::uint64_t h_order = 0;
  std::uint64_t cusp_count = 0;
  std::uint64_t component_count = 0;
  std::uint64_t geometric_cusps = 0;
  std::optional<std::uint64_t> x0_cusp_count;
  bool formula_only = false;
};

CensusReport census(const PolyA& f, std::uint64_t h = 1);

// Closed-form |Gl_2(A/fA)| from the factorisation of f.
std::uint64_t gl2_order_formula(const PolyA& f);

}  // namespace dforge

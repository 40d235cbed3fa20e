#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dforge/cusps.hpp"
#include "dforge/drinfeld.hpp"
#include "dforge/series.hpp"

namespace dforge {

using XSeries = Series<RPrime>;
using XSkew = SkewPoly<XSeries>;

// Lattice generated over A by ell = psi_f(1/x); shell_basis[j] = psi_{f T^j}(1/x).
struct TateLattice {
  UniversalRank1 u;
  XSeries ell;
  std::vector<XSeries> shell_basis;
  long shell_degree = 0;  // largest deg b represented

  // Nonzero-or-zero points psi_b(1/x) with b in fA and deg b <= shell_degree.
  std::vector<XSeries> shell_points() const;
};

TateLattice tate_lattice(const UniversalRank1& u, long shell_degree = -1);

// Degrees of the lattice shells that enter e mod x^{N+1}: deg b with
// (q - 1) q^{deg b} <= N.
long tate_shell_bound(std::uint64_t q, long N);

// e = sum s_i tau^i over R'[[x]] mod x^{N+1}.
XSkew lattice_exp(const TateLattice& lat, long N);

struct TateExpansion {
  long N = 0;
  TateLattice lattice;
  XSkew e;
  XSkew e_inv;
  DrinfeldModule<XSeries> psi;  // psi with constant series coefficients
  DrinfeldModule<XSeries> phi;  // phi^td
  XSeries g;
  XSeries delta;
  long k_delta = 0;

  std::uint64_t q() const { return phi.q(); }
  const UniversalRank1& u() const { return lattice.u; }
};

TateExpansion tate_module(const TateLattice& lat, long N);

// lambda^td(1,0) = e(1/x), lambda^td(0,1) = e(1).
LevelStructure<XSeries> tate_level(const TateExpansion& t);

struct JExpansion {
  long k = 0;
  XSeries alpha;  // unit power series with 1/j_a = x^k alpha
};
JExpansion j_expansion(const TateExpansion& t, const PolyA& a);

// Smallest precision at which the two additive series agree, over
// tau-degrees <= d (kExact when they agree exactly).
long agreement_precision(const XSkew& a, const XSkew& b, std::size_t d);

// e o psi_a versus phi^td_a o e.
long functional_equation_precision(const TateExpansion& t, const PolyA& a);

// sum c_k (delta x)^k.
XSeries substitute_scale(const XSeries& s, const XSeries& delta);

struct HSigma {
  Mat2 sigma;
  PolyA d;        // Galois element acting on R'
  RPrime xi;      // lambda / C_d(lambda)
  XSeries delta;  // h: x -> delta x
  long module_precision = 0;
  long point_precision = 0;
};

// Valuations of (lambda^td o sigma)(1,0) and (0,1); N forces (-1, 0).
std::pair<long, long> level_valuations(const TateExpansion& t, const LevelStructure<XSeries>& lam, const Mat2& sigma);

// The h_sigma map for sigma in N with its verification; MathError "not in
// N" when the valuations of the target level rule it out.
HSigma h_sigma(const Mat2& sigma, const TateExpansion& t, const LevelStructure<XSeries>& lam);

struct AssemblyCopy {
  Mat2 sigma;
  LevelStructure<XSeries> level;
};

struct UniversalAssembly {
  std::shared_ptr<const MatrixRing> ring;
  std::vector<AssemblyCopy> copies;

  // Copy i with g in sigma_i N, and n = sigma_i^{-1} g.
  std::pair<std::size_t, Mat2> locate(const Mat2& g) const;
};

UniversalAssembly universal_assembly(const TateExpansion& t, const LevelStructure<XSeries>& lam);

// A point R' -> F_{q^m}: T -> t, lambda -> a root of Phi_f at t.
struct Specialisation {
  Tower tower;
  Fe t;
  Fe lam;
  Fe operator()(const RPrime& r) const;
  Series<Fe> operator()(const XSeries& s) const;
  SkewPoly<Series<Fe>> operator()(const XSkew& s) const;
  DrinfeldModule<Series<Fe>> module(const DrinfeldModule<XSeries>& phi) const;
};

// Least t in F_{q^m} (by encoding) with f(t) != 0 and Phi_f(t, .) having
// a root, unless t_index pins it; the least root is used.
Specialisation specialisation_make(const UniversalRank1& u, std::uint32_t m, std::int64_t t_index = -1);

}  // namespace dforge

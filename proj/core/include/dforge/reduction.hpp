#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dforge/drinfeld.hpp"
#include "dforge/series.hpp"
#include "dforge/weil.hpp"

namespace dforge {

// K_V = F_{q^m}((pi)) at finite precision.
using LSeries = Series<Fe>;
using LSkew = SkewPoly<LSeries>;
using LocalModule = DrinfeldModule<LSeries>;

// Zero first, then by valuation, then by coefficient encodings.
bool point_less(const LSeries& a, const LSeries& b);

// phi_T = coeffs[0] + coeffs[1] tau + ..., theta = coeffs[0].
LocalModule local_module(const Tower& tw, std::vector<LSeries> coeffs);

// One edge of the lower hull of {(q^i - 1, v(a_i))}; slope = rise / run.
struct NewtonSegment {
  long run = 0;
  long rise = 0;
  bool integral() const { return rise % run == 0; }
};

std::vector<NewtonSegment> newton_slopes(const LSkew& a);

struct StableForm {
  LocalModule phi;
  long k = 0;
  int reduction_rank = 0;
};

// phi' = pi^{-k} phi pi^k with k the largest valuation of a nonzero
// f-torsion point.
StableForm stable_normalize(const LocalModule& phi, const PolyA& f);

// All of phi[f] over K_V, sorted by point_less. PrecisionError when the
// input precision cannot separate the roots, MathError when they are not
// K_V-rational.
std::vector<LSeries> local_torsion(const LocalModule& phi, const PolyA& f, long cap = 16);

struct Approximation {
  LSkew s;          // 1 + sum v_i tau^i, v_i in pi V
  LocalModule psi;  // s^{-1} phi s, rank 1
  long precision = 0;
};

// Successive approximation: s with s psi = phi s and psi of rank 1.
// N <= 0 uses the precision of the input.
Approximation drinfeld_approx(const LocalModule& phi, std::size_t D, long N = 0);

LSkew tau_series_invert(const LSkew& s, std::size_t D);

// s(z) against the precision it is known to: the terms of s past its
// stored degree contribute O(pi^{N + q^{D+1} v(z)}).
struct KernelCheck {
  long valuation = 0;
  long bound = 0;
  bool vanishes() const { return valuation >= bound; }
};

KernelCheck kernel_check(const Approximation& ap, const LSeries& z);

struct LatticeRecovery {
  LSeries u;    // torsion point of phi with v(u) < 0
  LSeries ell;  // psi_f(s^{-1}(u))
  KernelCheck residual;
};

LatticeRecovery lattice_recover(const LocalModule& phi, const Approximation& ap, const PolyA& f);

// n-th root of a series with n prime to p; MathError when none exists.
LSeries series_root(const LSeries& a, std::uint64_t n);

struct Triple {
  StableForm stable;
  Approximation approx;
  LevelStructure<LSeries> mu;
  LSeries ell;
  LSeries epsilon;  // epsilon (wedge^2 phi') epsilon^{-1} = psi
};

Triple triple_extract(const LocalModule& phi, const LevelStructure<LSeries>& lam, std::size_t D = 4);

// a = c b for some c in F_q^*.
bool equal_up_to_fq(const LocalModule& m, const FieldPtr& fq, const LSeries& a, const LSeries& b);

// Smallest exponent where the two additive series differ, over tau-degrees <= d.
long local_agreement(const LSkew& a, const LSkew& b, std::size_t d);

}  // namespace dforge

#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "dforge/drinfeld.hpp"

namespace dforge {

// psi_T = theta - Delta tau for phi_T = theta + g tau + Delta tau^2.
template <class K>
DrinfeldModule<K> exterior_power2(const DrinfeldModule<K>& phi) {
  if (phi.rank() != 2) throw MathError("exterior power needs a rank-2 module");
  const K& delta = phi.phi_T.coeff(2);
  if (!delta.is_unit()) throw MathError("top coefficient Delta is not a unit");
  return {phi.theta, SkewPoly<K>(phi.theta.zero(), phi.q(), {phi.theta, -delta}), phi.from_fq};
}

// Source phi with a reference basis of phi[f]; target psi with generator t0.
template <class K>
struct PairingContext {
  DrinfeldModule<K> phi;
  DrinfeldModule<K> psi;
  PolyA f;
  LevelStructure<K> basis;
  K t0;
  std::vector<K> t0_orbit;  // psi_a(t0) indexed by the residue index of a
};

namespace detail {

template <class K>
std::vector<K> orbit(const DrinfeldModule<K>& m, const ResidueRing& r, const K& u) {
  std::vector<K> o;
  o.reserve(r.size());
  for (std::uint32_t a = 0; a < r.size(); ++a) o.push_back(dm_image(m, r.element(a)).eval(u));
  return o;
}

template <class K>
bool all_distinct(const std::vector<K>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j]) return false;
  return true;
}

}  // namespace detail

// Context with the given reference basis and the least generator of
// psi[f] under `less`.
template <class K, class Less>
PairingContext<K> pairing_context(const DrinfeldModule<K>& phi, const PolyA& f, LevelStructure<K> basis,
                                  std::vector<K> psi_points, Less less) {
  DrinfeldModule<K> psi = exterior_power2(phi);
  const ResidueRing& r = *basis.residues;
  if (psi_points.size() != r.size()) throw MathError("psi[f] does not have |A/fA| points");
  std::sort(psi_points.begin(), psi_points.end(), less);
  for (const auto& t : psi_points) {
    auto o = detail::orbit(psi, r, t);
    if (detail::all_distinct(o)) {
      return {phi, std::move(psi), f.monic(), std::move(basis), t, std::move(o)};
    }
  }
  throw MathError("psi[f] has no generator among the given points");
}

// Canonical reference basis: the least point generating a free rank-1
// submodule, completed by the least point giving all of phi[f].
template <class K, class Less>
LevelStructure<K> reference_basis(const DrinfeldModule<K>& phi, const PolyA& f, std::vector<K> points, Less less) {
  const ResidueRing r(f);
  std::sort(points.begin(), points.end(), less);
  for (const auto& b1 : points) {
    if (!detail::all_distinct(detail::orbit(phi, r, b1))) continue;
    for (const auto& b2 : points) {
      try {
        return level_make(phi, f, {b1, b2});
      } catch (const MathError&) {
      }
    }
    break;
  }
  throw MathError("torsion points do not contain a basis of phi[f]");
}

// w(u, v) = psi_{det(c_u, c_v)}(t0), coordinates taken in the reference basis.
template <class K>
K weil_pair(const PairingContext<K>& ctx, const K& u, const K& v) {
  const auto cu = ctx.basis.coords(u);
  const auto cv = ctx.basis.coords(v);
  if (!cu || !cv) throw MathError("point is not in phi[f]");
  const ResidueRing& r = *ctx.basis.residues;
  const std::uint32_t det = r.sub(r.mul((*cu)[0], (*cv)[1]), r.mul((*cu)[1], (*cv)[0]));
  return ctx.t0_orbit.at(det);
}

// u v^q - u^q v.
template <class K>
K moore_pair(const K& u, const K& v, std::uint64_t q, const PolyA& f) {
  if (f.deg() != 1) throw MathError("the Moore pairing cross-check needs deg f = 1");
  return u * v.frobenius(q) - u.frobenius(q) * v;
}

template <class K>
struct WeilResult {
  DrinfeldModule<K> psi;
  LevelStructure<K> mu;
};

template <class K>
WeilResult<K> weil_map(const PairingContext<K>& ctx, const LevelStructure<K>& lambda) {
  if (lambda.rank() != 2) throw MathError("weil_map needs a rank-2 level structure");
  const K mu1 = weil_pair(ctx, lambda.at({1, 0}), lambda.at({0, 1}));
  return {ctx.psi, level_make(ctx.psi, ctx.f, {mu1})};
}

// Finite-field convenience: torsion of phi and psi computed by kernels
// over the point field of the torsion module.
PairingContext<Fe> pairing_context_fq(const TorsionModule& tor, const PolyA& f);
PairingContext<Fe> pairing_context_fq(const TorsionModule& tor, const PolyA& f, LevelStructure<Fe> basis);

}  // namespace dforge

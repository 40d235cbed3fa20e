#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dforge/gf.hpp"
#include "dforge/polya.hpp"
#include "dforge/rprime.hpp"
#include "dforge/skew.hpp"

namespace dforge {

// A Drinfeld module over A = F_q[T] with values in K, given by phi_T.
// from_fq is the structure map F_q -> K.
template <class K>
struct DrinfeldModule {
  K theta;
  SkewPoly<K> phi_T;
  std::function<K(const Fe&)> from_fq;

  std::size_t rank() const { return static_cast<std::size_t>(phi_T.deg()); }
  std::uint64_t q() const { return phi_T.q(); }
};

template <class K>
DrinfeldModule<K> dm_make(const K& theta, std::vector<K> coeffs, std::uint64_t q,
                          std::function<K(const Fe&)> from_fq) {
  if (coeffs.empty() || !(coeffs.front() == theta)) throw MathError("constant coefficient must equal theta");
  SkewPoly<K> phi(theta.zero(), q, std::move(coeffs));
  if (phi.deg() < 1) throw MathError("rank 0: phi_T has no tau terms");
  if (!phi.leading().is_unit()) throw MathError("leading coefficient of phi_T is not a unit");
  return {theta, std::move(phi), std::move(from_fq)};
}

// phi_a by Horner's rule in phi_T.
template <class K>
SkewPoly<K> dm_image(const DrinfeldModule<K>& phi, const PolyA& a) {
  SkewPoly<K> acc = phi.phi_T.zero();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    acc = acc * phi.phi_T + SkewPoly<K>::constant(phi.from_fq(a.coeffs()[i]), phi.q());
  }
  return acc;
}

// xi phi xi^{-1}: coefficient i becomes xi a_i xi^{-q^i}.
template <class K>
DrinfeldModule<K> dm_twist(const DrinfeldModule<K>& phi, const K& xi) {
  if (!xi.is_unit()) throw MathError("twist by a non-unit");
  const K xinv = xi.inv();
  std::vector<K> c;
  K pw = xinv;
  for (std::size_t i = 0; i < phi.phi_T.coeffs().size(); ++i) {
    if (i > 0) pw = pw.frobenius(phi.q());
    c.push_back(xi * phi.phi_T.coeffs()[i] * pw);
  }
  return {phi.theta, SkewPoly<K>(phi.theta.zero(), phi.q(), std::move(c)), phi.from_fq};
}

// Level f-structure: lambda on (A/fA)^r, tabulated. The vector with
// residue indices (a_1, ..., a_r) sits at position sum a_i Q^{i-1}.
template <class K>
struct LevelStructure {
  PolyA f;
  std::shared_ptr<const ResidueRing> residues;
  std::vector<K> basis;
  std::vector<K> table;

  std::size_t rank() const { return basis.size(); }
  const K& at(const std::vector<std::uint32_t>& v) const {
    std::size_t idx = 0;
    for (std::size_t i = v.size(); i-- > 0;) idx = idx * residues->size() + v[i];
    return table.at(idx);
  }
  std::vector<std::uint32_t> coords_of_index(std::size_t idx) const {
    std::vector<std::uint32_t> v(basis.size());
    for (auto& x : v) {
      x = static_cast<std::uint32_t>(idx % residues->size());
      idx /= residues->size();
    }
    return v;
  }
  // Coordinates of a point in the image, if it is there.
  std::optional<std::vector<std::uint32_t>> coords(const K& point) const {
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] == point) return coords_of_index(i);
    }
    return std::nullopt;
  }
};

// The A/fA-span of the given points under phi; throws when the images
// are not f-torsion or do not form a basis.
template <class K>
LevelStructure<K> level_make(const DrinfeldModule<K>& phi, const PolyA& f, std::vector<K> images) {
  auto res = std::make_shared<const ResidueRing>(f);
  const SkewPoly<K> phi_f = dm_image(phi, f);
  for (const auto& u : images) {
    if (!phi_f.eval(u).is_zero()) throw MathError("level image is not an f-torsion point");
  }
  std::vector<std::vector<K>> orbit;
  for (const auto& u : images) {
    std::vector<K> o;
    o.reserve(res->size());
    for (std::uint32_t a = 0; a < res->size(); ++a) o.push_back(dm_image(phi, res->element(a)).eval(u));
    orbit.push_back(std::move(o));
  }
  std::vector<K> table{images.empty() ? phi.theta.zero() : images[0].zero()};
  for (const auto& o : orbit) {
    std::vector<K> next;
    next.reserve(table.size() * o.size());
    for (const auto& a : o)
      for (const auto& t : table) next.push_back(t + a);
    table = std::move(next);
  }
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = i + 1; j < table.size(); ++j)
      if (table[i] == table[j]) throw MathError("not a basis: the images generate a proper submodule");
  return {f, res, std::move(images), std::move(table)};
}

// Level structure composed with sigma, in the row convention
// (lambda o sigma)(v) = lambda(v sigma). sigma is row-major over A/fA.
template <class K>
LevelStructure<K> level_compose(const LevelStructure<K>& lam, const std::vector<std::uint32_t>& sigma) {
  const ResidueRing& r = *lam.residues;
  const std::size_t n = lam.rank();
  LevelStructure<K> out{lam.f, lam.residues, {}, lam.table};
  for (std::size_t i = 0; i < lam.table.size(); ++i) {
    const auto v = lam.coords_of_index(i);
    std::vector<std::uint32_t> w(n, 0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) w[j] = r.add(w[j], r.mul(v[k], sigma[k * n + j]));
    out.table[i] = lam.at(w);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> e(n, 0);
    e[i] = 1;
    out.basis.push_back(out.at(e));
  }
  return out;
}

// --- finite-field instances ---

using FieldModule = DrinfeldModule<Fe>;

FieldModule dm_make_fq(const Fe& theta, std::vector<Fe> coeffs, std::uint64_t q);
// Coefficients moved into a larger field via the given index embedding.
FieldModule dm_lift(const FieldModule& phi, const FieldPtr& ext, const std::vector<std::uint32_t>& embed,
                    std::uint64_t q);

struct TorsionModule {
  std::uint32_t m = 0;  // degree of the point field over F_q
  FieldPtr field;
  FieldModule phi;      // phi over the point field
  std::vector<Fe> points;
};

TorsionModule dm_torsion(const FieldModule& phi, const PolyA& f, std::uint32_t search_bound = 12);

// --- Carlitz module and the universal rank-1 object ---

// C_a as an additive polynomial over A: coefficient list of X^{q^i}.
SkewPoly<PolyA> carlitz_image(const PolyA& a);
// Phi_f(X) = prod_{g | f} C_{f/g}(X)^{mu(g)}, little-endian in X.
std::vector<PolyA> carlitz_cyclotomic(const PolyA& f);

struct UniversalRank1 {
  PolyA f;
  RPrimeCtxPtr ring;
  DrinfeldModule<RPrime> psi;
  RPrime mu1;

  RPrime lambda() const { return RPrime::lambda(ring); }
  // C_d(lambda), the image of lambda under the Galois element d in (A/fA)*.
  RPrime galois_image(const PolyA& d) const;
  RPrime galois_apply(const PolyA& d, const RPrime& x) const { return x.substitute(galois_image(d)); }
};

UniversalRank1 rank1_universal(const PolyA& f);

}  // namespace dforge

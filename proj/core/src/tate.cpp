#include "dforge/tate.hpp"

#include <algorithm>

namespace dforge {

namespace {

XSeries xconst(const RPrime& r) { return XSeries::constant(r); }

XSeries inv_x(const UniversalRank1& u) { return XSeries::monomial(u.mu1.one(), -1); }

DrinfeldModule<XSeries> lift_psi(const UniversalRank1& u) {
  const auto from = u.psi.from_fq;
  return {xconst(u.psi.theta), u.psi.phi_T.map(xconst), [from](const Fe& c) { return xconst(from(c)); }};
}

}  // namespace

std::vector<XSeries> TateLattice::shell_points() const {
  std::vector<XSeries> pts{ell.zero()};
  const std::uint64_t q = u.psi.q();
  const FieldPtr fq = u.f.zero_elem().field();
  for (const auto& v : shell_basis) {
    const std::size_t n = pts.size();
    for (std::uint32_t c = 1; c < q; ++c) {
      const XSeries cv = v.scaled(u.psi.from_fq(Fe(fq, c)));
      for (std::size_t i = 0; i < n; ++i) pts.push_back(pts[i] + cv);
    }
  }
  return pts;
}

TateLattice tate_lattice(const UniversalRank1& u, long shell_degree) {
  const long df = u.f.deg();
  if (shell_degree < 0) shell_degree = df;
  if (shell_degree < df) throw MathError("shell degree below deg f");
  TateLattice lat{u, XSeries(u.mu1.zero()), {}, shell_degree};
  const XSeries y = inv_x(u);
  PolyA b = u.f;
  const PolyA t = polya_T(u.f.zero_elem().field());
  for (long j = 0; j <= shell_degree - df; ++j) {
    lat.shell_basis.push_back(dm_image(u.psi, b).eval(y, xconst));
    b = b * t;
  }
  lat.ell = lat.shell_basis.front();
  return lat;
}

long tate_shell_bound(std::uint64_t q, long N) {
  long d = -1;
  long v = static_cast<long>(q) - 1;
  while (v <= N) {
    ++d;
    v *= static_cast<long>(q);
  }
  return d;
}

XSkew lattice_exp(const TateLattice& lat, long N) {
  if (N < 1) throw PrecisionError("precision N must be at least 1", 1);
  const std::uint64_t q = lat.u.psi.q();
  const XSeries one = xconst(lat.u.mu1);
  const long dmax = tate_shell_bound(q, N);
  if (dmax < lat.u.f.deg()) return XSkew::constant(one, q);
  const TateLattice big = dmax > lat.shell_degree ? tate_lattice(lat.u, dmax) : lat;
  // P_W(z) = prod_{w in W} (z - w), built shell by shell:
  // P_{W + F_q v} = (tau - P_W(v)^{q-1}) P_W.
  XSkew p = XSkew::constant(one, q);
  const XSkew tau = XSkew::monomial(one, 1, q);
  for (long j = 0; j <= dmax - lat.u.f.deg(); ++j) {
    const XSeries c = p.eval(big.shell_basis[static_cast<std::size_t>(j)]);
    p = tau * p - XSkew::constant(power(c, q - 1), q) * p;
  }
  const XSeries& lin = p.coeff(0);
  long vmin = 0;
  for (const auto& c : p.coeffs()) vmin = std::min(vmin, c.valuation());
  const XSeries lin_inv = lin.inverse(N + 1 - vmin);
  std::vector<XSeries> s;
  for (const auto& c : p.coeffs()) s.push_back((c * lin_inv).truncated(N + 1));
  return XSkew(one.zero(), q, std::move(s));
}

TateExpansion tate_module(const TateLattice& lat, long N) {
  const std::uint64_t q = lat.u.psi.q();
  long need = static_cast<long>(q) - 1;
  for (long i = 0; i < lat.u.f.deg(); ++i) need *= static_cast<long>(q);
  if (N < need) throw PrecisionError("insufficient precision: Delta vanishes mod x^" + std::to_string(N + 1), need);
  XSkew e = lattice_exp(lat, N);
  const std::size_t d = 2 + static_cast<std::size_t>(std::max<long>(e.deg(), 0));
  XSkew e_inv = skew_series_inverse(e, d);
  auto psi = lift_psi(lat.u);
  const XSkew phi_t = XSkew::mul_trunc(XSkew::mul_trunc(e, psi.phi_T, d), e_inv, d);
  for (std::size_t i = 3; i <= d; ++i) {
    if (!phi_t.coeff(i).truncated(N + 1).is_zero()) {
      throw MathError("conjugated module has tau-degree above 2 at this precision");
    }
  }
  if (!(phi_t.coeff(0) == psi.theta)) throw MathError("conjugation changed the characteristic");
  XSeries g = phi_t.coeff(1).truncated(N + 1);
  XSeries delta = phi_t.coeff(2).truncated(N + 1);
  if (delta.is_zero()) throw PrecisionError("insufficient precision: Delta vanishes mod x^" + std::to_string(N + 1), need);
  if (!delta.lead().is_unit()) throw MathError("leading coefficient of Delta is not a unit of R'");
  auto phi = dm_make<XSeries>(psi.theta, {psi.theta, g, delta}, q, psi.from_fq);
  const long k = delta.valuation();
  return {N, lat, std::move(e), std::move(e_inv), std::move(psi), std::move(phi), std::move(g), std::move(delta), k};
}

LevelStructure<XSeries> tate_level(const TateExpansion& t) {
  const XSeries p1 = t.e.eval(inv_x(t.u()));
  const XSeries p0 = t.e.eval(xconst(t.u().mu1));
  return level_make(t.phi, t.u().f, {p1, p0});
}

JExpansion j_expansion(const TateExpansion& t, const PolyA& a) {
  if (a.deg() < 1) throw MathError("j-invariant needs deg a >= 1");
  const auto d = static_cast<std::size_t>(a.deg());
  const XSkew phi_a = dm_image(t.phi, a);
  const XSeries& bd = phi_a.coeff(d);
  const XSeries& b2d = phi_a.coeff(2 * d);
  std::uint64_t e = 1;
  for (std::size_t i = 0; i < d; ++i) e *= t.q();
  const XSeries inv_j = b2d * power(bd, e + 1).inverse(t.N + 1);
  if (inv_j.is_zero()) throw PrecisionError("1/j vanishes to the available precision", 2 * t.N);
  const long k = inv_j.valuation();
  return {k, inv_j.shifted(-k)};
}

long agreement_precision(const XSkew& a, const XSkew& b, std::size_t d) {
  long p = XSeries::kExact;
  for (std::size_t i = 0; i <= d; ++i) p = std::min(p, (a.coeff(i) - b.coeff(i)).valuation());
  return p;
}

long functional_equation_precision(const TateExpansion& t, const PolyA& a) {
  const std::size_t d = 2 * static_cast<std::size_t>(a.deg()) + static_cast<std::size_t>(std::max<long>(t.e.deg(), 0));
  const XSkew lhs = XSkew::mul_trunc(t.e, dm_image(t.psi, a), d);
  const XSkew rhs = XSkew::mul_trunc(dm_image(t.phi, a), t.e, d);
  return agreement_precision(lhs, rhs, d);
}

XSeries substitute_scale(const XSeries& s, const XSeries& delta) {
  if (s.is_zero()) return s;
  const XSeries xd = delta.shifted(1);
  XSeries acc = s.zero().truncated(s.prec());
  const long lo = s.lo();
  const long hi = s.end();
  XSeries pw = s.one();
  if (lo < 0) {
    const XSeries xinv = xd.inverse(s.prec());
    for (long k = 0; k < -lo; ++k) pw = pw * xinv;
  } else {
    for (long k = 0; k < lo; ++k) pw = pw * xd;
  }
  for (long k = lo; k < hi; ++k) {
    const RPrime& c = s.coeff(k);
    if (!c.is_zero()) acc = acc + pw.scaled(c);
    pw = pw * xd;
  }
  return acc.truncated(s.prec());
}

std::pair<long, long> level_valuations(const TateExpansion& t, const LevelStructure<XSeries>& lam,
                                       const Mat2& sigma) {
  (void)t;
  return {lam.at({sigma.a, sigma.b}).valuation(), lam.at({sigma.c, sigma.d}).valuation()};
}

namespace {

XSeries h_apply(const UniversalRank1& u, const RPrime& gal, const RPrime& eps, const XSeries& delta,
                const XSeries& s) {
  const XSeries moved = s.map([&](const RPrime& c) { return c.substitute(gal); });
  return substitute_scale(moved, delta).scaled(eps);
  (void)u;
}

}  // namespace

HSigma h_sigma(const Mat2& sigma, const TateExpansion& t, const LevelStructure<XSeries>& lam) {
  const UniversalRank1& u = t.u();
  const ResidueRing& r = *lam.residues;
  const auto [v1, v2] = level_valuations(t, lam, sigma);
  const MatrixRing m(u.f);
  if (v1 != -1 || v2 != 0 || !m.in_N(sigma)) {
    throw MathError("not in N: target level has valuations (" + std::to_string(v1) + ", " + std::to_string(v2) +
                    ") instead of (-1, 0)");
  }
  HSigma out{sigma, r.element(sigma.d), u.mu1, XSeries(u.mu1.zero()), 0, 0};
  const RPrime gal = u.galois_image(out.d);
  const RPrime lam_r = u.lambda();
  out.xi = lam_r * gal.inv();
  const RPrime eps = out.xi.inv();
  const RPrime psi_b1 = dm_image(u.psi, r.element(sigma.b)).eval(u.mu1);
  const RPrime a = u.psi.from_fq(Fe(u.f.zero_elem().field(), sigma.a));
  const XSeries dinv = (xconst(a) + xconst(psi_b1).shifted(1)).scaled(out.xi);
  out.delta = dinv.inverse(t.N + 1);

  // Module: eps h(phi) eps^{-1} against phi.
  const XSkew h_phi = t.phi.phi_T.map([&](const XSeries& c) { return h_apply(u, gal, u.mu1, out.delta, c); });
  DrinfeldModule<XSeries> hmod{t.phi.theta, h_phi, t.phi.from_fq};
  const XSkew back = dm_twist(hmod, xconst(eps)).phi_T;
  out.module_precision = agreement_precision(back, t.phi.phi_T, 2);

  const XSeries p10 = h_apply(u, gal, eps, out.delta, lam.at({1, 0}));
  const XSeries p01 = h_apply(u, gal, eps, out.delta, lam.at({0, 1}));
  out.point_precision = std::min((p10 - lam.at({sigma.a, sigma.b})).valuation(),
                                 (p01 - lam.at({sigma.c, sigma.d})).valuation());
  return out;
}

std::pair<std::size_t, Mat2> UniversalAssembly::locate(const Mat2& g) const {
  for (std::size_t i = 0; i < copies.size(); ++i) {
    const Mat2 n = ring->mul(ring->inv(copies[i].sigma), g);
    if (ring->in_N(n)) return {i, n};
  }
  throw MathError("matrix lies in no coset of the assembly");
}

UniversalAssembly universal_assembly(const TateExpansion& t, const LevelStructure<XSeries>& lam) {
  const Gl2Group g = gl2_enum(t.u().f);
  UniversalAssembly out{g.ring, {}};
  for (const auto& s : coset_reps(g, CosetSide::Left)) out.copies.push_back({s, level_compose(lam, s.entries())});
  return out;
}

Fe Specialisation::operator()(const RPrime& r) const {
  const Tower& tw = tower;
  return r.specialise(t, lam, [&tw](const Fe& c) { return tw.lift(c); });
}

Series<Fe> Specialisation::operator()(const XSeries& s) const {
  return s.map([this](const RPrime& r) { return (*this)(r); });
}

SkewPoly<Series<Fe>> Specialisation::operator()(const XSkew& s) const {
  return s.map([this](const XSeries& c) { return (*this)(c); });
}

DrinfeldModule<Series<Fe>> Specialisation::module(const DrinfeldModule<XSeries>& phi) const {
  const Tower tw = tower;
  return {(*this)(phi.theta), (*this)(phi.phi_T),
          [tw](const Fe& c) { return Series<Fe>::constant(tw.lift(c)); }};
}

Specialisation specialisation_make(const UniversalRank1& u, std::uint32_t m, std::int64_t t_index) {
  const FieldPtr fq = u.f.zero_elem().field();
  std::uint32_t e = 0;
  for (std::uint64_t x = 1; x < fq->size(); x *= fq->characteristic()) ++e;
  Tower tw = field_make(fq->characteristic(), e, m);
  auto lift = [&tw](const Fe& c) { return tw.lift(c); };
  for (std::uint32_t ti = 0; ti < tw.ext->size(); ++ti) {
    if (t_index >= 0 && ti != static_cast<std::uint32_t>(t_index)) continue;
    const Fe t(tw.ext, ti);
    if (u.f.eval_in(t, lift).is_zero()) continue;
    std::vector<Fe> phi;
    for (const auto& c : u.ring->phi) phi.push_back(c.eval_at(t, lift));
    for (std::uint32_t li = 0; li < tw.ext->size(); ++li) {
      const Fe l(tw.ext, li);
      Fe acc = t.zero();
      for (std::size_t i = phi.size(); i-- > 0;) acc = acc * l + phi[i];
      if (acc.is_zero()) return {tw, t, l};
    }
  }
  throw MathError("no specialisation point of R' over F_{q^m}");
}

}  // namespace dforge

#include "dforge/reduction.hpp"

#include <algorithm>
#include <numeric>

#include "dforge/linalg.hpp"

namespace dforge {

namespace {

std::uint64_t qpow(std::uint64_t q, std::size_t i) {
  std::uint64_t r = 1;
  for (std::size_t k = 0; k < i; ++k) r *= q;
  return r;
}

long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

LSeries lconst(const Fe& c) { return LSeries::constant(c); }

const FieldPtr& point_field(const LocalModule& m) { return m.theta.zero_elem().field(); }

}  // namespace

bool point_less(const LSeries& a, const LSeries& b) {
  if (a.is_zero() != b.is_zero()) return a.is_zero();
  if (a.is_zero()) return false;
  if (a.valuation() != b.valuation()) return a.valuation() < b.valuation();
  const long hi = std::min(a.prec(), b.prec());
  for (long k = a.lo(); k < hi && (k < a.end() || k < b.end()); ++k) {
    const auto x = a.coeff(k).index(), y = b.coeff(k).index();
    if (x != y) return x < y;
  }
  return false;
}

LocalModule local_module(const Tower& tw, std::vector<LSeries> coeffs) {
  if (coeffs.empty()) throw MathError("empty module");
  const LSeries theta = coeffs.front();
  const Tower t = tw;
  return dm_make<LSeries>(theta, std::move(coeffs), tw.q, [t](const Fe& c) { return lconst(t.lift(c)); });
}

std::vector<NewtonSegment> newton_slopes(const LSkew& a) {
  if (a.is_zero()) throw MathError("Newton polygon of zero");
  struct Pt {
    long x, y;
  };
  std::vector<Pt> known, bounds;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const LSeries& c = a.coeffs()[i];
    const long x = static_cast<long>(qpow(a.q(), i) - 1);
    if (!c.is_zero()) {
      known.push_back({x, c.valuation()});
    } else if (!c.exact()) {
      bounds.push_back({x, c.prec()});
    }
  }
  if (known.empty() || known.front().x != 0) {
    throw PrecisionError("linear coefficient vanishes to its precision");
  }
  std::vector<Pt> hull;
  for (const auto& p : known) {
    while (hull.size() >= 2) {
      const Pt& o = hull[hull.size() - 2];
      const Pt& m = hull.back();
      // Drop m when it lies on or above the segment o -> p.
      if ((m.y - o.y) * (p.x - o.x) >= (p.y - o.y) * (m.x - o.x)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  if (bounds.size() > 0) {
    for (const auto& b : bounds) {
      if (b.x > hull.back().x) continue;
      for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        const Pt& l = hull[i];
        const Pt& r = hull[i + 1];
        if (b.x < l.x || b.x > r.x) continue;
        // Below the hull: the point's true height is not resolved.
        if ((b.y - l.y) * (r.x - l.x) < (r.y - l.y) * (b.x - l.x)) {
          throw PrecisionError("coefficient valuation exceeds precision", b.y + 1);
        }
      }
    }
  }
  std::vector<NewtonSegment> out;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    out.push_back({hull[i + 1].x - hull[i].x, hull[i + 1].y - hull[i].y});
  }
  return out;
}

StableForm stable_normalize(const LocalModule& phi, const PolyA& f) {
  const auto segs = newton_slopes(dm_image(phi, f));
  if (segs.empty()) throw MathError("phi_f has no nonzero roots");
  for (const auto& s : segs) {
    if (!s.integral()) throw MathError("potentially stable only: non-integral Newton slope");
  }
  const long k = -(segs.front().rise / segs.front().run);
  const Fe one(point_field(phi), 1);
  LocalModule out = k == 0 ? phi : dm_twist(phi, LSeries::monomial(one, -k));
  int rank = 0;
  for (std::size_t i = 0; i < out.phi_T.coeffs().size(); ++i) {
    const LSeries& c = out.phi_T.coeffs()[i];
    if (!c.is_zero() && c.valuation() < 0) throw MathError("normalised module has a non-integral coefficient");
    if (!c.is_zero() && c.valuation() == 0) rank = static_cast<int>(i);
  }
  return {std::move(out), k, rank};
}

std::vector<LSeries> local_torsion(const LocalModule& phi, const PolyA& f, long cap) {
  const LSkew a = dm_image(phi, f);
  const auto segs = newton_slopes(a);
  long v0 = 0;
  for (const auto& s : segs) v0 = std::min(v0, floor_div(-s.rise, s.run));
  long pout = cap;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const LSeries& c = a.coeffs()[i];
    if (c.exact()) continue;
    pout = std::min(pout, c.prec() + static_cast<long>(qpow(a.q(), i)) * v0);
  }
  if (pout <= v0) throw PrecisionError("torsion points are not determined at this precision", v0 - pout + 1);
  const FieldPtr k = point_field(phi);
  const std::uint32_t p = k->characteristic();
  const std::uint32_t n = k->degree();
  long emin = pout;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const LSeries& c = a.coeffs()[i];
    if (!c.is_zero()) emin = std::min(emin, c.valuation() + static_cast<long>(qpow(a.q(), i)) * v0);
  }
  const std::size_t nvar = static_cast<std::size_t>(pout - v0) * n;
  const std::size_t neq = static_cast<std::size_t>(pout - emin) * n;
  std::vector<std::vector<std::uint32_t>> rows(neq, std::vector<std::uint32_t>(nvar, 0));
  std::vector<std::uint32_t> unit(n, 0);
  for (std::size_t col = 0; col < nvar; ++col) {
    const long e = v0 + static_cast<long>(col / n);
    std::fill(unit.begin(), unit.end(), 0);
    unit[col % n] = 1;
    const LSeries img = a.eval(LSeries::monomial(Fe(k, k->from_digits(unit)), e)).truncated(pout);
    for (long t = emin; t < pout; ++t) {
      const auto d = k->digits(img.coeff(t).index());
      for (std::uint32_t j = 0; j < n && j < d.size(); ++j) {
        rows[static_cast<std::size_t>(t - emin) * n + j][col] = d[j];
      }
    }
  }
  const auto ns = nullspace_mod_p(rows, nvar, p);
  const std::uint64_t expected = qpow(qpow(phi.q(), static_cast<std::size_t>(f.deg())), phi.rank());
  const std::uint64_t found = qpow(p, ns.size());
  if (found > expected) {
    throw PrecisionError("torsion points are not separated at this precision", pout + 1);
  }
  if (found < expected) throw MathError("f-torsion is not rational over K_V");
  std::vector<LSeries> out;
  for (const auto& v : span_mod_p(ns, nvar, p)) {
    std::vector<Fe> c;
    for (std::size_t j = 0; j < nvar; j += n) {
      c.emplace_back(k, k->from_digits(std::vector<std::uint32_t>(v.begin() + static_cast<long>(j),
                                                                 v.begin() + static_cast<long>(j + n))));
    }
    out.emplace_back(Fe(k, 0), v0, std::move(c), pout);
  }
  std::sort(out.begin(), out.end(), point_less);
  return out;
}

LSkew tau_series_invert(const LSkew& s, std::size_t D) {
  if (s.is_zero() || !(s.coeff(0) == s.zero_elem().one()) || !s.coeff(0).is_unit() ||
      s.coeff(0).valuation() != 0 || s.coeff(0).end() != 1) {
    throw MathError("additive series must have constant coefficient 1");
  }
  return skew_series_inverse(s, D);
}

Approximation drinfeld_approx(const LocalModule& phi, std::size_t D, long N) {
  const auto& c = phi.phi_T.coeffs();
  long avail = LSeries::kExact;
  for (const auto& x : c) avail = std::min(avail, x.prec());
  if (N <= 0) N = avail;
  if (N >= LSeries::kExact) throw PrecisionError("exact input needs an explicit precision");
  if (N > avail) throw PrecisionError("input module known only mod pi^" + std::to_string(avail), N);
  if (N < 2) throw PrecisionError("successive approximation needs the module mod pi^2 at least", 2);
  if (c.size() < 2 || c[1].is_zero() || c[1].valuation() != 0) throw MathError("reduction rank is not 1");
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_zero() && c[i].valuation() < (i >= 2 ? 1 : 0)) throw MathError("reduction rank is not 1");
  }
  if (D < 1) D = 1;
  const std::size_t di = D + 1;
  const std::uint64_t q = phi.q();
  const FieldPtr k = point_field(phi);
  const LSeries one = LSeries::constant(Fe(k, 1));
  const Fe theta0 = phi.theta.coeff(0);
  const Fe cbar = c[1].coeff(0);
  LSkew s = LSkew::constant(one, q);
  auto conj = [&](const LSkew& sv, long prec) {
    const LSkew inv = skew_series_inverse(sv, di);
    const LSkew chi = LSkew::mul_trunc(LSkew::mul_trunc(inv, phi.phi_T, di), sv, di);
    std::vector<LSeries> t;
    for (std::size_t i = 0; i <= di; ++i) t.push_back(chi.coeff(i).truncated(prec));
    return t;
  };
  for (long n = 1; n < N; ++n) {
    const auto chi = conj(s, n + 1);
    std::vector<Fe> w(di + 1, Fe(k, 0));
    for (std::size_t j = di; j >= 2; --j) {
      if (!chi[j].is_zero() && chi[j].valuation() < n) throw MathError("successive approximation lost its invariant");
      const Fe r = chi[j].coeff(n);
      const Fe gap = theta0.pow(qpow(q, j)) - theta0;
      w[j - 1] = (r - gap * w[j]) * cbar.pow(qpow(q, j - 1)).inv();
    }
    std::vector<LSeries> step{one};
    for (std::size_t j = 1; j <= di; ++j) step.push_back(LSeries::monomial(w[j], n));
    const LSkew upd(one.zero(), q, std::move(step));
    const LSkew next = LSkew::mul_trunc(s, upd, di);
    std::vector<LSeries> sc;
    for (const auto& x : next.coeffs()) sc.push_back(x.truncated(N));
    sc[0] = one;
    s = LSkew(one.zero(), q, std::move(sc));
  }
  const auto chi = conj(s, N);
  long achieved = N;
  for (std::size_t j = 2; j <= D; ++j) achieved = std::min(achieved, chi[j].valuation());
  std::vector<LSeries> out;
  for (std::size_t j = 0; j <= D && j < s.coeffs().size(); ++j) out.push_back(s.coeffs()[j]);
  LocalModule psi{phi.theta, LSkew(one.zero(), q, {chi[0], chi[1]}), phi.from_fq};
  return {LSkew(one.zero(), q, std::move(out)), std::move(psi), achieved};
}

LatticeRecovery lattice_recover(const LocalModule& phi, const Approximation& ap, const PolyA& f) {
  bool polar = false;
  for (const auto& sg : newton_slopes(dm_image(phi, f))) polar = polar || sg.rise > 0;
  if (!polar) throw MathError("no lattice: every torsion point is integral, reduction is good (rank 2)");
  const auto tors = local_torsion(phi, f);
  const LSeries* u = nullptr;
  for (const auto& t : tors) {
    if (!t.is_zero() && t.valuation() < 0) {
      u = &t;
      break;
    }
  }
  if (!u) throw MathError("no lattice: every torsion point is integral, reduction is good (rank 2)");
  const std::size_t d = static_cast<std::size_t>(std::max<long>(ap.s.deg(), 1));
  const LSeries l1 = tau_series_invert(ap.s, d).eval(*u);
  const LSeries ell = dm_image(ap.psi, f).eval(l1);
  if (ell.is_zero() || ell.valuation() >= 0) throw MathError("recovered lattice point is not polar");
  return {*u, ell, kernel_check(ap, ell)};
}

KernelCheck kernel_check(const Approximation& ap, const LSeries& z) {
  // Coefficients of s beyond its degree are only known to be O(pi^N).
  long bound = z.prec();
  for (const auto& c : ap.s.coeffs()) bound = std::min(bound, c.prec() + (z.is_zero() ? 0 : z.valuation()));
  if (!z.is_zero()) {
    const auto top = static_cast<std::size_t>(ap.s.deg() + 1);
    bound = std::min(bound, ap.precision + static_cast<long>(qpow(ap.s.q(), top)) * z.valuation());
  }
  const LSeries r = ap.s.eval(z).truncated(bound);
  return {r.valuation(), bound};
}

LSeries series_root(const LSeries& a, std::uint64_t n) {
  if (a.is_zero()) throw MathError("root of a series vanishing to its precision");
  const long v = a.valuation();
  if (v % static_cast<long>(n) != 0) throw MathError("valuation is not divisible by the root degree");
  const FieldPtr k = a.lead().field();
  std::optional<Fe> r0;
  for (std::uint32_t i = 1; i < k->size() && !r0; ++i) {
    if (Fe(k, i).pow(n) == a.lead()) r0 = Fe(k, i);
  }
  if (!r0) throw MathError("leading coefficient has no root in the residue field");
  const LSeries u = a.shifted(-v).scaled(r0->pow(n).inv());
  const long prec = u.prec();
  const Fe nf(k, k->from_int(static_cast<std::int64_t>(n % k->characteristic())));
  LSeries r = LSeries::constant(Fe(k, 1));
  for (long step = 1; step < 2 * prec + 2; step *= 2) {
    const LSeries rn1 = power(r, n - 1);
    r = (r - (rn1 * r - u) * rn1.scaled(nf).inverse(prec)).truncated(prec);
  }
  return r.scaled(*r0).shifted(v / static_cast<long>(n));
}

Triple triple_extract(const LocalModule& phi, const LevelStructure<LSeries>& lam, std::size_t D) {
  const PolyA& f = lam.f;
  StableForm st = stable_normalize(phi, f);
  if (st.reduction_rank != 1) throw MathError("reduction rank is " + std::to_string(st.reduction_rank) + ", not 1");
  const FieldPtr k = point_field(phi);
  const LSeries xi = LSeries::monomial(Fe(k, 1), -st.k);
  std::vector<LSeries> images;
  for (const auto& b : lam.basis) images.push_back(b * xi);
  const auto lam1 = level_make(st.phi, f, images);
  Approximation ap = drinfeld_approx(st.phi, D);
  const LatticeRecovery lr = lattice_recover(st.phi, ap, f);

  const LocalModule wedge = exterior_power2(st.phi);
  const LSeries ratio = wedge.phi_T.coeff(1) * ap.psi.phi_T.coeff(1).inv();
  const LSeries eps = series_root(ratio, phi.q() - 1);
  const LSeries eps_inv = eps.inv();
  std::vector<LSeries> wpts;
  for (const auto& t : local_torsion(ap.psi, f)) wpts.push_back(t * eps_inv);
  const auto ref = reference_basis(st.phi, f, lam1.table, point_less);
  const auto ctx = pairing_context(st.phi, f, ref, wpts, point_less);
  const auto w = weil_map(ctx, lam1);
  auto mu = level_make(ap.psi, f, {w.mu.at({1}) * eps});
  return {std::move(st), std::move(ap), std::move(mu), lr.ell, eps};
}

bool equal_up_to_fq(const LocalModule& m, const FieldPtr& fq, const LSeries& a, const LSeries& b) {
  for (std::uint32_t c = 1; c < fq->size(); ++c) {
    if (a == m.from_fq(Fe(fq, c)) * b) return true;
  }
  return false;
}

long local_agreement(const LSkew& a, const LSkew& b, std::size_t d) {
  long p = LSeries::kExact;
  for (std::size_t i = 0; i <= d; ++i) p = std::min(p, (a.coeff(i) - b.coeff(i)).valuation());
  return p;
}

}  // namespace dforge

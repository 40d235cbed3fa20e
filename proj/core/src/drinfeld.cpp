#include "dforge/drinfeld.hpp"

#include "dforge/config.hpp"

namespace dforge {

namespace {

std::uint32_t log_base(std::uint64_t q, std::uint32_t p) {
  std::uint32_t e = 0;
  std::uint64_t x = 1;
  while (x < q) {
    x *= p;
    ++e;
  }
  if (x != q) throw ConfigError("q is not a power of the characteristic");
  return e;
}

}  // namespace

FieldModule dm_make_fq(const Fe& theta, std::vector<Fe> coeffs, std::uint64_t q) {
  const FieldPtr l = theta.field();
  const std::uint32_t e = log_base(q, l->characteristic());
  if (l->degree() % e != 0) throw ConfigError("coefficient field does not contain F_q");
  const FieldPtr fq = Field::make(l->characteristic(), e);
  auto emb = std::make_shared<const std::vector<std::uint32_t>>(l->embedding_from(*fq));
  return dm_make<Fe>(theta, std::move(coeffs), q, [l, emb](const Fe& c) { return Fe(l, emb->at(c.index())); });
}

FieldModule dm_lift(const FieldModule& phi, const FieldPtr& ext, const std::vector<std::uint32_t>& embed,
                    std::uint64_t /*q*/) {
  auto emb = std::make_shared<const std::vector<std::uint32_t>>(embed);
  auto lift = [ext, emb](const Fe& c) { return Fe(ext, emb->at(c.index())); };
  auto old = phi.from_fq;
  return {lift(phi.theta), phi.phi_T.map(lift), [lift, old](const Fe& c) { return lift(old(c)); }};
}

TorsionModule dm_torsion(const FieldModule& phi, const PolyA& f, std::uint32_t search_bound) {
  const FieldPtr l = phi.theta.field();
  const std::uint32_t p = l->characteristic();
  const std::uint32_t e = log_base(phi.q(), p);
  const std::uint32_t k0 = l->degree() / e;
  if (f.is_zero() || f.deg() < 1) throw MathError("f must be a nonzero non-unit");
  if (f.eval_in(phi.theta, phi.from_fq).is_zero()) {
    throw MathError("characteristic divides f: gamma(f) = 0");
  }
  std::uint64_t target = 1;
  for (long i = 0; i < static_cast<long>(phi.rank()) * f.deg(); ++i) target *= phi.q();
  for (std::uint32_t m = k0; m <= search_bound; m += k0) {
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < e * m; ++i) size *= p;
    if (size > max_field_size()) break;
    const FieldPtr ext = m == k0 ? l : Field::make(p, e * m);
    std::vector<std::uint32_t> emb;
    if (m == k0) {
      emb.resize(l->size());
      for (std::uint32_t i = 0; i < l->size(); ++i) emb[i] = i;
    } else {
      emb = ext->embedding_from(*l);
    }
    FieldModule lifted = dm_lift(phi, ext, emb, phi.q());
    auto pts = skew_kernel(dm_image(lifted, f));
    if (pts.size() == target) return {m, ext, std::move(lifted), std::move(pts)};
  }
  throw ConfigError("f-torsion not rational over any F_{q^m} within the search bound");
}

SkewPoly<PolyA> carlitz_image(const PolyA& a) {
  const FieldPtr fq = a.zero_elem().field();
  const std::uint64_t q = fq->size();
  const PolyA t = polya_T(fq);
  DrinfeldModule<PolyA> c{t, SkewPoly<PolyA>(t.zero(), q, {t, t.one()}),
                          [](const Fe& x) { return PolyA::constant(x); }};
  return dm_image(c, a);
}

namespace {

Poly<PolyA> carlitz_xpoly(const PolyA& a) {
  const auto s = carlitz_image(a);
  const std::uint64_t q = s.q();
  const PolyA z = a.zero();
  std::vector<PolyA> c;
  std::uint64_t pw = 1;
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
    if (c.size() < pw + 1) c.resize(pw + 1, z);
    c[pw] = s.coeffs()[i];
    pw *= q;
  }
  return Poly<PolyA>(z, std::move(c));
}

}  // namespace

std::vector<PolyA> carlitz_cyclotomic(const PolyA& f) {
  if (f.is_zero() || f.deg() < 1) throw MathError("f must be a nonzero non-unit");
  const PolyA fm = f.monic();
  const auto primes = prime_factors(fm);
  Poly<PolyA> num(fm.zero(), {fm.one()});
  Poly<PolyA> den = num;
  for (std::size_t mask = 0; mask < (std::size_t{1} << primes.size()); ++mask) {
    PolyA g = fm.one();
    int bits = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if ((mask >> i) & 1U) {
        g = g * primes[i];
        ++bits;
      }
    }
    const Poly<PolyA> c = carlitz_xpoly(fm.exact_div(g));
    if (bits % 2 == 0) {
      num = num * c;
    } else {
      den = den * c;
    }
  }
  const Poly<PolyA> phi = num.exact_div(den);
  return phi.coeffs();
}

RPrime UniversalRank1::galois_image(const PolyA& d) const {
  if (gcd(d, f).deg() != 0) throw MathError("Galois element must be a unit modulo f");
  const auto ring_ptr = ring;
  return carlitz_image(d).eval(lambda(), [ring_ptr](const PolyA& a) { return RPrime::from_polya(ring_ptr, a); });
}

UniversalRank1 rank1_universal(const PolyA& f) {
  if (f.is_zero() || f.deg() < 1) throw MathError("f must be a nonzero non-unit");
  const FieldPtr fq = f.zero_elem().field();
  const std::uint64_t q = fq->size();
  const auto ring = rprime_context(f, q, carlitz_cyclotomic(f));
  const RPrime lam = RPrime::lambda(ring);
  const RPrime theta = RPrime::from_polya(ring, polya_T(fq));
  auto from_fq = [ring](const Fe& c) { return RPrime::from_polya(ring, PolyA::constant(c)); };
  auto psi = dm_make<RPrime>(theta, {theta, power(lam, q - 1)}, q, from_fq);
  const RPrime one = theta.one();
  if (!dm_image(psi, f).eval(one).is_zero()) throw MathError("mu(1) = 1 is not f-torsion");
  return {f.monic(), ring, std::move(psi), one};
}

}  // namespace dforge

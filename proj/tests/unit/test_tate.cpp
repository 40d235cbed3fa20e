#include "doctest.h"
#include "dforge/tate.hpp"

using namespace dforge;

namespace {

struct Fixture {
  FieldPtr f3 = Field::make(3, 1);
  PolyA t = polya_T(f3);
  UniversalRank1 u = rank1_universal(t);
  TateExpansion te = tate_module(tate_lattice(u), 9);

  RPrime cst(const RatFunc& r) const { return RPrime::from_ratfunc(u.ring, r); }
  RPrime tpow(long k) const {
    const RatFunc tt(t);
    RatFunc r = tt.one();
    for (long i = 0; i < (k < 0 ? -k : k); ++i) r = r * tt;
    return cst(k < 0 ? r.inv() : r);
  }
};

}  // namespace

TEST_CASE("shell bound") {
  CHECK(tate_shell_bound(3, 1) == -1);
  CHECK(tate_shell_bound(3, 2) == 0);
  CHECK(tate_shell_bound(3, 5) == 0);
  CHECK(tate_shell_bound(3, 6) == 1);
  CHECK(tate_shell_bound(3, 18) == 2);
  CHECK(tate_shell_bound(2, 1) == 0);
}

TEST_CASE("tate expansion q=3 f=T") {
  Fixture fx;
  const auto& te = fx.te;
  const RPrime two_over = fx.tpow(-2) + fx.tpow(-2);
  // s_1 = 2 T^-2 x^6 + T^-2 x^8 mod x^10.
  const XSeries& s1 = te.e.coeff(1);
  CHECK(s1.valuation() == 6);
  CHECK(s1.coeff(6) == two_over);
  CHECK(s1.coeff(7).is_zero());
  CHECK(s1.coeff(8) == fx.tpow(-2));
  CHECK(s1.coeff(9).is_zero());
  CHECK(te.e.coeff(0) == XSeries::constant(fx.u.mu1).truncated(10));

  // g = 2T mod x^2, Delta = u x^6 with u(0) = T.
  CHECK(te.g.coeff(0) == fx.tpow(1) + fx.tpow(1));
  CHECK(te.g.coeff(1).is_zero());
  CHECK(te.k_delta == 6);
  CHECK(te.delta.coeff(6) == fx.tpow(1));

  const auto j = j_expansion(te, fx.t);
  CHECK(j.k == 6);
  CHECK(j.alpha.coeff(0) == fx.tpow(-3));

  for (const PolyA& a : {fx.t, fx.t * fx.t, fx.t + polya_const(fx.f3, 1)})
    CHECK(functional_equation_precision(te, a) >= 5);
}

TEST_CASE("tate precision guard") {
  Fixture fx;
  const auto lat = tate_lattice(fx.u);
  CHECK_THROWS_AS(tate_module(lat, 5), PrecisionError);
  CHECK(tate_module(lat, 6).k_delta == 6);
  try {
    tate_module(lat, 1);
  } catch (const PrecisionError& e) {
    CHECK(e.required() == 6);
  }
}

TEST_CASE("tate level and h_sigma") {
  Fixture fx;
  const auto lam = tate_level(fx.te);
  CHECK(lam.at({1, 0}).valuation() == -1);
  CHECK(lam.at({0, 1}).valuation() == 0);
  // Nine distinct torsion points.
  std::size_t distinct = 0;
  for (std::uint32_t i = 0; i < 9; ++i) {
    bool fresh = true;
    for (std::uint32_t j = 0; j < i; ++j)
      if (lam.table[i] == lam.table[j]) fresh = false;
    distinct += fresh;
  }
  CHECK(distinct == 9);

  const MatrixRing m(fx.t);
  const Gl2Group g = gl2_enum(fx.t);
  std::size_t in_n = 0, rejected = 0;
  for (const auto& s : g.elements) {
    if (m.in_N(s)) {
      ++in_n;
      const HSigma h = h_sigma(s, fx.te, lam);
      CHECK(h.module_precision >= 5);
      CHECK(h.point_precision >= 5);
    } else if (rejected < 5) {
      ++rejected;
      CHECK_THROWS_WITH_AS(h_sigma(s, fx.te, lam), doctest::Contains("not in N"), MathError);
    }
  }
  CHECK(in_n == 12);
  CHECK(rejected == 5);

  const auto asm_ = universal_assembly(fx.te, lam);
  CHECK(asm_.copies.size() == 4);
  for (const auto& s : g.elements) {
    const auto [i, n] = asm_.locate(s);
    CHECK(m.in_N(n));
    CHECK(m.mul(asm_.copies[i].sigma, n) == s);
  }
}

TEST_CASE("tate coefficients lie in A_f[lambda]") {
  Fixture fx;
  for (const auto& c : fx.te.phi.phi_T.coeffs())
    for (long k = c.lo(); k < c.end(); ++k) CHECK(c.coeff(k).in_af_lattice());
  for (const auto& c : fx.te.e.coeffs())
    for (long k = c.lo(); k < c.end(); ++k) CHECK(c.coeff(k).in_af_lattice());
}

TEST_CASE("specialisation") {
  Fixture fx;
  const auto sp = specialisation_make(fx.u, 2);
  CHECK(sp.t.index() == 1);
  CHECK((sp.lam * sp.lam + sp.t).is_zero());
  CHECK(sp(fx.u.lambda()) == sp.lam);
  const Series<Fe> d = sp(fx.te.delta);
  CHECK(d.valuation() == 6);
  CHECK(d.coeff(6) == sp.t);
}

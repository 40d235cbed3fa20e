#include "doctest.h"
#include "dforge/reduction.hpp"
#include "dforge/tate.hpp"

using namespace dforge;

namespace {

LSeries mono(const FieldPtr& k, std::uint32_t c, long e, long prec = 12) {
  return LSeries::monomial(Fe(k, c), e, prec);
}

struct Round {
  FieldPtr f3 = Field::make(3, 1);
  PolyA t = polya_T(f3);
  UniversalRank1 u = rank1_universal(t);
  TateExpansion te = tate_module(tate_lattice(u), 9);
  LevelStructure<XSeries> lam_td = tate_level(te);
  Specialisation sp = specialisation_make(u, 2);
  LocalModule phi = sp.module(te.phi);
  LevelStructure<LSeries> lam = level_make(phi, t, {sp(lam_td.at({1, 0})), sp(lam_td.at({0, 1}))});
};

}  // namespace

TEST_CASE("newton polygon") {
  const Tower tw = field_make(3, 1, 2);
  const auto k = tw.ext;
  const LSkew a(LSeries(Fe(k, 0)), 3, {mono(k, 1, 0), mono(k, 1, 0), mono(k, 1, 6)});
  const auto segs = newton_slopes(a);
  REQUIRE(segs.size() == 2);
  CHECK(segs[0].run == 2);
  CHECK(segs[0].rise == 0);
  CHECK(segs[1].run == 6);
  CHECK(segs[1].rise == 6);

  const LSkew units(LSeries(Fe(k, 0)), 3, {mono(k, 1, 0), mono(k, 2, 0), mono(k, 1, 0)});
  const auto s2 = newton_slopes(units);
  REQUIRE(s2.size() == 1);
  CHECK(s2[0].rise == 0);
  CHECK(s2[0].run == 8);

  const LSkew r1(LSeries(Fe(k, 0)), 3, {mono(k, 1, 0), mono(k, 3, 0)});
  const auto s3 = newton_slopes(r1);
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].run == 2);

  // A vanishing middle coefficient below the hull is unresolved.
  const LSkew gap(LSeries(Fe(k, 0)), 3, {mono(k, 1, 0), LSeries(Fe(k, 0), 1), mono(k, 1, 8)});
  CHECK_THROWS_AS(newton_slopes(gap), PrecisionError);
}

TEST_CASE("stable normal form") {
  const Tower tw = field_make(3, 1, 2);
  const auto k = tw.ext;
  const auto good = local_module(tw, {mono(k, 1, 0), mono(k, 1, 0), mono(k, 2, 0)});
  const auto sf = stable_normalize(good, polya_T(tw.base));
  CHECK(sf.k == 0);
  CHECK(sf.reduction_rank == 2);
  const auto ap_fail = [&] { drinfeld_approx(good, 3); };
  CHECK_THROWS_AS(ap_fail(), MathError);

  const auto pot = local_module(tw, {mono(k, 1, 0), mono(k, 1, 0), mono(k, 1, 1)});
  CHECK_THROWS_WITH_AS(stable_normalize(pot, polya_T(tw.base)), doctest::Contains("potentially stable"), MathError);

  Round r;
  const auto st = stable_normalize(r.phi, r.t);
  CHECK(st.k == 0);
  CHECK(st.reduction_rank == 1);
  CHECK(local_agreement(st.phi.phi_T, r.phi.phi_T, 2) >= 9);

  // Conjugating by pi^3 is undone by the normal form.
  const auto moved = dm_twist(r.phi, mono(r.sp.tower.ext, 1, 3, LSeries::kExact));
  const auto st2 = stable_normalize(moved, r.t);
  CHECK(st2.k == 3);
  CHECK(local_agreement(st2.phi.phi_T, r.phi.phi_T, 2) >= 9);
}

TEST_CASE("local torsion") {
  Round r;
  const auto tors = local_torsion(r.phi, r.t);
  REQUIRE(tors.size() == 9);
  CHECK(tors[0].is_zero());
  int polar = 0;
  for (const auto& p : tors) polar += !p.is_zero() && p.valuation() == -1;
  CHECK(polar == 6);
  for (const auto& p : r.lam.table) {
    bool found = false;
    for (const auto& x : tors) found = found || x == p;
    CHECK(found);
  }
}

TEST_CASE("tau series inversion") {
  const Tower tw = field_make(3, 1, 2);
  const auto k = tw.ext;
  const LSeries one = mono(k, 1, 0, LSeries::kExact);
  const LSkew id = LSkew::constant(one, 3);
  CHECK(local_agreement(tau_series_invert(id, 4), id, 4) >= LSeries::kExact);
  const LSeries c = mono(k, 3, 1, 20);
  const LSkew s(one.zero(), 3, {one, c});
  const LSkew t = tau_series_invert(s, 4);
  CHECK(t.coeff(1) == -c);
  CHECK(t.coeff(2) == c * c.frobenius(3));
  CHECK(local_agreement(LSkew::mul_trunc(s, t, 4), id, 4) >= 20);
  CHECK(local_agreement(tau_series_invert(t, 4), s, 4) >= 20);
  const LSkew bad(one.zero(), 3, {c, one});
  CHECK_THROWS_AS(tau_series_invert(bad, 3), MathError);
}

TEST_CASE("series roots") {
  const auto k = Field::make(3, 2);
  const LSeries a(Fe(k, 0), 4, {Fe(k, 1), Fe(k, 5), Fe(k, 2)}, 12);
  const LSeries r = series_root(a, 2);
  CHECK(r.valuation() == 2);
  CHECK(r * r == a);
  CHECK_THROWS_AS(series_root(a.shifted(1), 2), MathError);
}

TEST_CASE("reduction round trip from the Tate expansion") {
  Round r;
  const auto ap = drinfeld_approx(r.phi, 3);
  CHECK(ap.precision >= 9);
  CHECK(local_agreement(ap.s, r.sp(r.te.e), 3) >= 5);
  CHECK(ap.psi.rank() == 1);
  CHECK(local_agreement(ap.psi.phi_T, r.sp(r.te.psi.phi_T), 1) >= 9);
  for (std::size_t i = 1; i < ap.s.coeffs().size(); ++i) CHECK(ap.s.coeff(i).valuation() >= 1);

  const auto lr = lattice_recover(r.phi, ap, r.t);
  CHECK(lr.ell.valuation() == -3);
  CHECK(lr.residual.vanishes());
  CHECK(equal_up_to_fq(r.phi, r.f3, lr.ell, r.sp(r.te.lattice.ell)));
  // A-stability of the recovered lattice.
  for (const PolyA& a : {r.t, r.t * r.t, r.t + polya_const(r.f3, 2)}) {
    const LSeries img = dm_image(ap.psi, a).eval(lr.ell);
    CHECK(kernel_check(ap, img).vanishes());
  }

  const Triple tr = triple_extract(r.phi, r.lam);
  const LSeries mu1 = r.sp(XSeries::constant(r.u.mu1));
  CHECK(equal_up_to_fq(r.phi, r.f3, tr.mu.at({1}), mu1));
  CHECK(tr.stable.k == 0);

  // det sigma in F_q^*: the same triple up to F_q^*.
  const MatrixRing m(r.t);
  for (const auto& s : gl2_enum(r.t).elements) {
    const auto lam_s = level_compose(r.lam, s.entries());
    const Triple ts = triple_extract(r.phi, lam_s);
    CHECK(equal_up_to_fq(r.phi, r.f3, ts.mu.at({1}), tr.mu.at({1})));
    (void)m;
  }
}

TEST_CASE("good reduction has no lattice") {
  const Tower tw = field_make(3, 1, 2);
  const auto k = tw.ext;
  const auto good = local_module(tw, {mono(k, 1, 0), mono(k, 1, 0), mono(k, 2, 0)});
  const auto rank1 = local_module(tw, {mono(k, 1, 0), mono(k, 2, 0)});
  const auto ap = drinfeld_approx(rank1, 2, 8);
  CHECK(ap.s.deg() == 0);
  CHECK_THROWS_WITH_AS(lattice_recover(good, ap, polya_T(tw.base)), doctest::Contains("no lattice"), MathError);
}

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "dforge/cusps.hpp"
#include "dforge/ratfunc.hpp"
#include "dforge/reduction.hpp"
#include "dforge/tate.hpp"
#include "dforge/weil.hpp"
#include "dforge_cli/selftest.hpp"

using namespace dforge;

namespace {

// Pinned tolerances.
constexpr long kTateN = 9;
constexpr long kTateSlack = 4;          // criterion 5: precision >= N - 4
constexpr long kHSigmaPrecision = 5;    // criterion 8: mod x^5
constexpr long kRoundTripPrecision = 5;  // criterion 7
constexpr int kOracleSamples = 20;
constexpr int kRandomSigmaT2 = 200;
constexpr int kNegativeSigma = 5;
constexpr std::uint64_t kSeed = 20260101;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

// --- independent counting oracles over A/fA ---

struct Counts {
  std::uint64_t units = 0, gl2 = 0, sl2 = 0, n = 0;
};

Counts brute_counts(const PolyA& f, std::uint64_t q) {
  const ResidueRing r(f);
  const std::uint32_t qq = r.size();
  Counts c;
  for (std::uint32_t a = 0; a < qq; ++a) c.units += r.is_unit(a);
  for (std::uint32_t a = 0; a < qq; ++a)
    for (std::uint32_t b = 0; b < qq; ++b)
      for (std::uint32_t cc = 0; cc < qq; ++cc)
        for (std::uint32_t d = 0; d < qq; ++d) {
          const std::uint32_t det = r.sub(r.mul(a, d), r.mul(b, cc));
          c.gl2 += r.is_unit(det);
          c.sl2 += det == 1;
        }
  c.n = (q - 1) * qq * c.units;
  return c;
}

std::vector<PolyA> monic_polys(const FieldPtr& fq, long deg) {
  std::vector<PolyA> out;
  std::uint64_t total = 1;
  for (long i = 0; i < deg; ++i) total *= fq->size();
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::uint32_t> c;
    std::uint64_t x = code;
    for (long i = 0; i < deg; ++i) {
      c.push_back(static_cast<std::uint32_t>(x % fq->size()));
      x /= fq->size();
    }
    c.push_back(1);
    out.push_back(polya_from_indices(fq, c));
  }
  return out;
}

// --- motive oracle for the exterior square ---

template <class K>
std::vector<Poly<K>> motive_coords(const SkewPoly<K>& m, const SkewPoly<K>& phi_t) {
  const std::size_t r = static_cast<std::size_t>(phi_t.deg());
  const K z = phi_t.zero_elem();
  std::vector<Poly<K>> out(r, Poly<K>(z));
  if (m.is_zero()) return out;
  auto [quot, rem] = m.right_divmod(phi_t);
  if (!quot.is_zero()) {
    auto inner = motive_coords(quot, phi_t);
    for (std::size_t i = 0; i < r; ++i) out[i] = Poly<K>::monomial(z.one(), 1) * inner[i];
  }
  for (std::size_t i = 0; i < r; ++i) out[i] = out[i] + Poly<K>(z, {rem.coeff(i)});
  return out;
}

template <class K>
Poly<K> motive_det(const SkewPoly<K>& phi_t) {
  const K one = phi_t.zero_elem().one();
  if (phi_t.deg() == 1) return motive_coords(SkewPoly<K>::monomial(one, 1, phi_t.q()), phi_t)[0];
  const auto c1 = motive_coords(SkewPoly<K>::monomial(one, 1, phi_t.q()), phi_t);
  const auto c2 = motive_coords(SkewPoly<K>::monomial(one, 2, phi_t.q()), phi_t);
  return c1[0] * c2[1] - c1[1] * c2[0];
}

template <class K>
bool oracle_agrees(const DrinfeldModule<K>& phi) {
  return motive_det(phi.phi_T) == motive_det(exterior_power2(phi).phi_T);
}

// --- the criteria ---

Verdict census_exactness() {
  Verdict v;
  const auto f3 = Field::make(3, 1);
  const PolyA t = polya_T(f3);
  struct Row {
    const char* name;
    PolyA f;
    std::uint64_t cusps, components;
    std::optional<std::uint64_t> x0;
  };
  const std::vector<Row> rows{{"T", t, 4, 1, 2}, {"T^2", t * t, 36, 3, std::nullopt},
                              {"T^2+1", t * t + polya_const(f3, 1), 40, 40, std::nullopt}};
  for (const auto& row : rows) {
    const CensusReport r = census(row.f);
    const Counts c = brute_counts(row.f, 3);
    v.detail << " f=" << row.name << ": cusps " << r.cusp_count << " components " << r.component_count;
    if (r.x0_cusp_count) v.detail << " x0 " << *r.x0_cusp_count;
    v.detail << ";";
    v.require(!r.formula_only, std::string(row.name) + " enumerated");
    v.require(r.sl2_order == c.sl2 && r.gl2_order == c.gl2 && r.units == c.units,
              std::string(row.name) + " group orders match brute force");
    v.require(r.cusp_count == c.sl2 / (r.Q * 2), std::string(row.name) + " cusp formula");
    v.require(r.component_count == c.units / 2, std::string(row.name) + " component formula");
    v.require(r.cusp_count == row.cusps, std::string(row.name) + " cusps = " + std::to_string(row.cusps));
    v.require(r.component_count == row.components,
              std::string(row.name) + " components = " + std::to_string(row.components));
    if (row.x0) v.require(r.x0_cusp_count == row.x0, std::string(row.name) + " x0 cusps");
  }
  return v;
}

Verdict formula_identity() {
  Verdict v;
  int checked = 0;
  for (std::uint32_t p : {2u, 3u}) {
    const auto fq = Field::make(p, 1);
    for (long deg = 1; deg <= 2; ++deg) {
      for (const auto& f : monic_polys(fq, deg)) {
        const CensusReport r = census(f);
        const Counts c = brute_counts(f, p);
        const std::uint64_t rhs = c.sl2 / (r.Q * (p - 1));
        v.require(c.sl2 % (r.Q * (p - 1)) == 0, "divisibility");
        v.require(c.gl2 % c.n == 0 && c.gl2 / c.n == rhs, "brute-force [Gl2:N] = |Sl2|/(Q(q-1))");
        v.require(r.geometric_cusps == rhs && r.gl2_order == r.n_order * r.geometric_cusps,
                  "coset enumeration agrees");
        ++checked;
      }
    }
  }
  v.detail << " " << checked << " moduli f with deg f <= 2, q in {2, 3}";
  return v;
}

Verdict weil_equivariance() {
  Verdict v;
  const auto f3 = Field::make(3, 1);
  const PolyA t = polya_T(f3);
  const Fe two(f3, 2);
  const auto phi = dm_make_fq(two, {two, two.zero(), two.one()}, 3);
  int checked = 0;
  {
    const auto tor = dm_torsion(phi, t);
    const auto ctx = pairing_context_fq(tor, t);
    const auto lam = level_compose(ctx.basis, {1, 1, 2, 0});
    const Fe mu1 = weil_map(ctx, lam).mu.at({1});
    const auto g = gl2_enum(t);
    for (const auto& s : g.elements) {
      const Fe lhs = weil_map(ctx, level_compose(lam, s.entries())).mu.at({1});
      v.require(lhs == dm_image(ctx.psi, g.ring->ring().element(g.ring->det(s))).eval(mu1), "f=T equivariance");
      ++checked;
    }
  }
  {
    const auto tor = dm_torsion(phi, t * t);
    const auto ctx = pairing_context_fq(tor, t * t);
    const auto g = gl2_enum(t * t);
    const auto lam = level_compose(ctx.basis, {1, 3, 0, 4});
    const Fe mu1 = weil_map(ctx, lam).mu.at({1});
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<std::size_t> pick(0, g.elements.size() - 1);
    for (int i = 0; i < kRandomSigmaT2; ++i) {
      const Mat2& s = g.elements[pick(rng)];
      const Fe lhs = weil_map(ctx, level_compose(lam, s.entries())).mu.at({1});
      v.require(lhs == dm_image(ctx.psi, g.ring->ring().element(g.ring->det(s))).eval(mu1), "f=T^2 equivariance");
      ++checked;
    }
  }
  v.detail << " " << checked << " sigma checked (48 for f=T, " << kRandomSigmaT2 << " random for f=T^2)";
  return v;
}

Verdict exterior_power() {
  Verdict v;
  std::mt19937_64 rng(kSeed + 4);
  const auto f3 = Field::make(3, 1);
  std::uniform_int_distribution<std::uint32_t> d3(0, 2), d9(0, 8);
  auto rnd_poly = [&] {
    std::vector<std::uint32_t> c(1 + d3(rng));
    for (auto& x : c) x = d3(rng);
    return polya_from_indices(f3, c);
  };
  const RatFunc th(polya_T(f3));
  auto from_fq = [](const Fe& c) { return RatFunc(PolyA::constant(c)); };
  int n = 0;
  for (int s = 0; s < kOracleSamples; ++s, ++n) {
    const RatFunc g(rnd_poly(), rnd_poly() + polya_T(f3) * polya_T(f3) * polya_T(f3));
    RatFunc delta(rnd_poly(), polya_const(f3, 1) + polya_T(f3));
    if (delta.is_zero()) delta = th;
    v.require(oracle_agrees(dm_make<RatFunc>(th, {th, g, delta}, 3, from_fq)), "oracle over F_3(theta)");
  }
  const auto k9 = Field::make(3, 2);
  for (int s = 0; s < kOracleSamples; ++s, ++n) {
    const Fe theta(k9, 1 + d9(rng) % 8), g(k9, d9(rng)), delta(k9, 1 + d9(rng) % 8);
    v.require(oracle_agrees(dm_make_fq(theta, {theta, g, delta}, 3)), "oracle over F_9");
  }
  const PolyA t = polya_T(f3);
  int pairs = 0;
  for (std::uint32_t gi = 0; gi < 3; ++gi) {
    const Fe two(f3, 2);
    const auto tor = dm_torsion(dm_make_fq(two, {two, Fe(f3, gi), two.one()}, 3), t);
    const auto ctx = pairing_context_fq(tor, t);
    const auto psi_t = dm_image(ctx.psi, t);
    std::optional<Fe> kappa;
    for (const auto& a : tor.points) {
      for (const auto& b : tor.points) {
        const Fe m = moore_pair(a, b, 3, t);
        const Fe w = weil_pair(ctx, a, b);
        v.require(psi_t.eval(m).is_zero(), "Moore pairing lands in psi[T]");
        ++pairs;
        if (w.is_zero()) {
          v.require(m.is_zero(), "Moore pairing vanishes with the Weil pairing");
          continue;
        }
        const Fe k = m * w.inv();
        if (!kappa) kappa = k;
        v.require(k == *kappa, "one fixed unit");
      }
    }
  }
  v.detail << " " << n << " modules against the motive oracle, " << pairs << " torsion pairs";
  return v;
}

struct TateFixture {
  FieldPtr f3 = Field::make(3, 1);
  PolyA t = polya_T(f3);
  UniversalRank1 u = rank1_universal(t);
  TateExpansion te = tate_module(tate_lattice(u), kTateN);
};

Verdict tate_functional_equation(const TateFixture& fx) {
  Verdict v;
  for (const PolyA& a : {fx.t, fx.t * fx.t, fx.t + polya_const(fx.f3, 1)}) {
    const long p = functional_equation_precision(fx.te, a);
    v.detail << " deg a=" << a.deg() << ": precision " << (p >= XSeries::kExact ? std::string("exact") : std::to_string(p)) << ";";
    v.require(p >= kTateN - kTateSlack, "precision >= N - 4");
  }
  return v;
}

Verdict cusp_degeneration(const TateFixture& fx) {
  Verdict v;
  const auto& te = fx.te;
  v.require(te.phi.theta == te.psi.theta, "theta");
  v.require(te.g.coeff(0) == fx.u.psi.phi_T.coeff(1), "g(0) = psi tau-coefficient");
  v.require(te.delta.coeff(0).is_zero(), "Delta = 0 mod x");
  for (std::size_t i = 1; i < te.e.coeffs().size(); ++i) v.require(te.e.coeff(i).valuation() >= 1, "e = 1 mod x");
  const JExpansion j1 = j_expansion(te, fx.t);
  const JExpansion j2 = j_expansion(tate_module(tate_lattice(rank1_universal(fx.t)), kTateN), fx.t);
  v.require(j1.k > 0, "k > 0");
  v.require(j1.k == 6, "k = 6");
  v.require(j1.k == j2.k && j1.alpha == j2.alpha, "deterministic");
  v.detail << " v_x(1/j_T) = " << j1.k << ", k_Delta = " << te.k_delta;
  return v;
}

Verdict reduction_round_trip(const TateFixture& fx) {
  Verdict v;
  const auto lam_td = tate_level(fx.te);
  const Specialisation sp = specialisation_make(fx.u, 2);
  const LocalModule phi = sp.module(fx.te.phi);
  const auto lam = level_make(phi, fx.t, {sp(lam_td.at({1, 0})), sp(lam_td.at({0, 1}))});
  const StableForm st = stable_normalize(phi, fx.t);
  v.require(st.reduction_rank == 1 && st.k == 0, "stable rank 1 with k = 0");
  const Approximation ap = drinfeld_approx(st.phi, 3);
  const long agree = local_agreement(ap.s, sp(fx.te.e), 3);
  v.require(agree >= kRoundTripPrecision, "s agrees with e_Lambda");
  const LatticeRecovery lr = lattice_recover(st.phi, ap, fx.t);
  v.require(equal_up_to_fq(phi, fx.f3, lr.ell, sp(fx.te.lattice.ell)), "ell = psi_T(1/x) up to F_q^*");
  const Triple tr = triple_extract(phi, lam);
  v.require(equal_up_to_fq(phi, fx.f3, tr.mu.at({1}), sp(XSeries::constant(fx.u.mu1))), "mu up to F_q^*");
  v.detail << " at t=" << sp.t.index() << ", lambda=" << sp.lam.index() << " in F_9: s agrees to x^"
           << (agree >= LSeries::kExact ? std::string("inf") : std::to_string(agree)) << ", ell known to x^"
           << lr.ell.prec();
  return v;
}

Verdict h_sigma_property(const TateFixture& fx) {
  Verdict v;
  const auto lam = tate_level(fx.te);
  const MatrixRing m(fx.t);
  const Gl2Group g = gl2_enum(fx.t);
  std::vector<Mat2> outside;
  int in_n = 0;
  long worst = LSeries::kExact;
  for (const auto& s : g.elements) {
    if (!m.in_N(s)) {
      outside.push_back(s);
      continue;
    }
    ++in_n;
    const HSigma h = h_sigma(s, fx.te, lam);
    worst = std::min({worst, h.module_precision, h.point_precision});
  }
  v.require(in_n == 12, "|N| = 12");
  v.require(worst >= kHSigmaPrecision, "isomorphic mod x^5");
  std::mt19937_64 rng(kSeed + 8);
  std::shuffle(outside.begin(), outside.end(), rng);
  int detected = 0;
  for (int i = 0; i < kNegativeSigma; ++i) {
    try {
      h_sigma(outside[static_cast<std::size_t>(i)], fx.te, lam);
    } catch (const MathError& e) {
      detected += std::string(e.what()).find("not in N") != std::string::npos;
    }
  }
  v.require(detected == kNegativeSigma, "valuation obstruction detected");
  v.detail << " " << in_n << " sigma in N agree to x^" << worst << "; " << detected << "/" << kNegativeSigma
           << " sigma outside N rejected";
  return v;
}

Verdict property_suites() {
  Verdict v;
  const auto a = io::run_selftest(kSeed);
  const auto b = io::run_selftest(kSeed);
  for (std::size_t i = 0; i < a.size(); ++i) {
    v.detail << " " << a[i].name << " " << a[i].samples - a[i].failures << "/" << a[i].samples << ";";
    v.require(a[i].failures == 0, a[i].name);
    v.require(a[i].samples == b[i].samples && b[i].failures == a[i].failures, "deterministic");
  }
  return v;
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](int n, const char* title, const std::function<Verdict()>& run) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << " [exception: " << e.what() << "]";
    }
    all = all && v.pass;
    std::printf("%s %d %s:%s\n", v.pass ? "PASS" : "FAIL", n, title, v.detail.str().c_str());
    std::fflush(stdout);
  };
  report(1, "cusp census exactness", census_exactness);
  report(2, "formula identity", formula_identity);
  report(3, "Weil equivariance", weil_equivariance);
  report(4, "exterior power", exterior_power);
  const TateFixture fx;
  report(5, "Tate functional equation", [&] { return tate_functional_equation(fx); });
  report(6, "cusp degeneration structure", [&] { return cusp_degeneration(fx); });
  report(7, "reduction round trip", [&] { return reduction_round_trip(fx); });
  report(8, "h_sigma property", [&] { return h_sigma_property(fx); });
  report(9, "property suites", property_suites);
  return all ? 0 : 1;
}

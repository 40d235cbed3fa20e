#include "dforge_cli/selftest.hpp"

#include <functional>
#include <random>

namespace dforge::io {

namespace {

using Rng = std::mt19937_64;

struct Suite {
  SuiteResult r;
  bool corrupt = false;
  void check(bool ok, const std::string& what) {
    ++r.samples;
    if (corrupt && r.samples == 1) ok = !ok;
    if (!ok) {
      if (r.failures == 0) r.first_failure = what;
      ++r.failures;
    }
  }
};

Fe rand_fe(const FieldPtr& k, Rng& rng, bool nonzero = false) {
  std::uniform_int_distribution<std::uint32_t> d(nonzero ? 1 : 0, k->size() - 1);
  return Fe(k, d(rng));
}

SkewPoly<Fe> rand_skew(const FieldPtr& k, std::uint64_t q, Rng& rng, int maxdeg) {
  std::uniform_int_distribution<int> n(0, maxdeg);
  std::vector<Fe> c;
  const int len = n(rng) + 1;
  for (int i = 0; i < len; ++i) c.push_back(rand_fe(k, rng));
  return SkewPoly<Fe>(Fe(k, 0), q, std::move(c));
}

LSeries rand_series(const FieldPtr& k, Rng& rng, bool unit) {
  std::uniform_int_distribution<long> lo(-3, 3), len(1, 8);
  const long l = lo(rng);
  std::vector<Fe> c;
  const long n = len(rng);
  for (long i = 0; i < n; ++i) c.push_back(rand_fe(k, rng, unit && i == 0));
  return LSeries(Fe(k, 0), l, std::move(c), l + n + 2);
}

void skew_axioms(Suite& s, Rng& rng) {
  const auto k = Field::make(3, 2);
  for (int i = 0; i < 1000; ++i) {
    const auto a = rand_skew(k, 3, rng, 4), b = rand_skew(k, 3, rng, 4), c = rand_skew(k, 3, rng, 4);
    const bool ok = (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && (a + b) * c == a * c + b * c &&
                    a * a.one() == a && a.one() * a == a;
    s.check(ok, "skew ring axioms over F_9, q = 3");
  }
}

void divmod_roundtrip(Suite& s, Rng& rng) {
  const auto k = Field::make(3, 2);
  for (int i = 0; i < 1000; ++i) {
    const auto a = rand_skew(k, 3, rng, 6);
    auto b = rand_skew(k, 3, rng, 3);
    if (b.is_zero()) b = b.one();
    const auto [qt, r] = a.right_divmod(b);
    s.check(qt * b + r == a && (r.is_zero() || r.deg() < b.deg()), "a = quot * b + rem with deg rem < deg b");
  }
}

void torsion_counts(Suite& s, Rng& rng) {
  const auto f3 = Field::make(3, 1);
  const PolyA t = polya_T(f3);
  const std::vector<PolyA> rank1_f{t, t + polya_const(f3, 1), t * t, t * t + polya_const(f3, 1)};
  for (int i = 0; i < 24; ++i) {
    const int rank = i % 2 == 0 ? 1 : 2;
    const Fe theta = rand_fe(f3, rng, true);
    std::vector<Fe> c{theta};
    for (int j = 1; j <= rank; ++j) c.push_back(rand_fe(f3, rng, j == rank));
    const auto phi = dm_make_fq(theta, c, 3);
    PolyA f = rank == 1 ? rank1_f[static_cast<std::size_t>(i / 2) % rank1_f.size()] : t + polya_const(f3, i % 3);
    if (f.eval_in(theta, [](const Fe& x) { return x; }).is_zero()) f = f + polya_const(f3, 1);
    if (f.eval_in(theta, [](const Fe& x) { return x; }).is_zero()) f = f + polya_const(f3, 1);
    std::uint64_t expected = 1;
    for (long d = 0; d < rank * f.deg(); ++d) expected *= 3;
    const auto tor = dm_torsion(phi, f);
    s.check(tor.points.size() == expected, "|phi[f]| = q^{r deg f}");
  }
}

void series_inversion(Suite& s, Rng& rng) {
  const auto k = Field::make(3, 2);
  for (int i = 0; i < 500; ++i) {
    const LSeries a = rand_series(k, rng, true);
    const long full = a.prec() - 2 * a.valuation();
    const LSeries inv = a.inverse(full);
    const LSeries one = LSeries::constant(Fe(k, 1));
    s.check(a * inv == one && inv.prec() == full && (a * inv).prec() == a.prec() - a.valuation(),
            "a * a^{-1} = 1 at precision");
  }
}

void serialization(Suite& s, Rng& rng) {
  const auto k = Field::make(3, 2);
  for (int i = 0; i < 200; ++i) {
    const LSeries a = rand_series(k, rng, false);
    const Json j = lseries_to_json(a);
    const LSeries b = lseries_from_json(Json::parse(j.dump()), k);
    s.check(lseries_to_json(b).dump() == j.dump() && b.lo() == a.lo() && b.prec() == a.prec(), "series round trip");
  }
  const auto f3 = Field::make(3, 1);
  const PolyA t = polya_T(f3);
  for (const PolyA& f : {t, t * t, t * t + polya_const(f3, 1)}) {
    const Json j = census_to_json(census(f), f);
    s.check(census_to_json(census_from_json(Json::parse(j.dump())), f).dump() == j.dump(), "census round trip");
  }
  const auto u = rank1_universal(t * t);
  std::uniform_int_distribution<int> e(-2, 2);
  for (int i = 0; i < 50; ++i) {
    RPrime x = u.mu1;
    for (int r = 0; r < 3; ++r) {
      const RatFunc c = RatFunc::from_af(polya_const(f3, rand_fe(f3, rng).index()) + t, u.f, e(rng) < 0 ? 1 : 0);
      x = x * u.lambda() + RPrime::from_ratfunc(u.ring, c);
    }
    const Json j = rprime_to_json(x);
    s.check(rprime_from_json(Json::parse(j.dump()), u.ring) == x, "R' element round trip");
  }
  const TateDoc d = tate_doc(tate_module(tate_lattice(rank1_universal(t)), 9));
  const Json j = tate_to_json(d);
  s.check(tate_to_json(tate_from_json(Json::parse(j.dump()))).dump() == j.dump(), "tate document round trip");
}

}  // namespace

std::vector<SuiteResult> run_selftest(std::uint64_t seed, const std::string& fault) {
  const std::vector<std::pair<std::string, std::function<void(Suite&, Rng&)>>> suites{
      {"skew_axioms", skew_axioms},         {"divmod_roundtrip", divmod_roundtrip},
      {"torsion_counts", torsion_counts},   {"series_inversion", series_inversion},
      {"serialization", serialization},
  };
  std::vector<SuiteResult> out;
  for (std::size_t i = 0; i < suites.size(); ++i) {
    Suite s;
    s.r.name = suites[i].first;
    s.corrupt = suites[i].first == fault;
    Rng rng(seed * 1000003u + i);
    try {
      suites[i].second(s, rng);
    } catch (const std::exception& e) {
      ++s.r.failures;
      if (s.r.first_failure.empty()) s.r.first_failure = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(s.r));
  }
  return out;
}

Json selftest_to_json(std::uint64_t seed, const std::vector<SuiteResult>& r) {
  Json out;
  out["seed"] = num(seed);
  Json suites = Json::array();
  bool pass = true;
  for (const auto& s : r) {
    Json j;
    j["name"] = s.name;
    j["samples"] = num(s.samples);
    j["failures"] = num(s.failures);
    if (s.failures) j["first_failure"] = s.first_failure;
    suites.push_back(std::move(j));
    pass = pass && s.failures == 0;
  }
  out["suites"] = std::move(suites);
  out["verdict"] = pass ? "pass" : "fail";
  return out;
}

}  // namespace dforge::io

#include <random>
#include <set>

#include "doctest.h"
#include "dforge/gf.hpp"
#include "dforge/polya.hpp"
#include "dforge/ratfunc.hpp"
#include "dforge/series.hpp"

using namespace dforge;

namespace {

std::uint64_t brute_order(const Field& k, std::uint32_t a) {
  std::uint64_t n = 1;
  std::uint32_t x = a;
  while (x != 1) {
    x = k.mul(x, a);
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("F_9 has i^2 = -1 and Frobenius i -> 2i") {
  const Tower t = field_make(3, 1, 2);
  const Fe i(t.ext, 3);  // digits (0, 1)
  CHECK((i * i) == Fe(t.ext, 2));
  CHECK(i.frobenius(3) == Fe(t.ext, 6));
  for (std::uint32_t a = 0; a < 9; ++a) {
    const Fe x(t.ext, a);
    CHECK(x.frobenius(3).frobenius(3) == x);
  }
}

TEST_CASE("F_3 Frobenius is the identity") {
  const Tower t = field_make(3, 1, 1);
  for (std::uint32_t a = 0; a < 3; ++a) CHECK(Fe(t.ext, a).frobenius(3) == Fe(t.ext, a));
}

TEST_CASE("F_4: x (x+1) = 1") {
  const Tower t = field_make(2, 2, 1);
  CHECK((Fe(t.ext, 2) * Fe(t.ext, 3)) == Fe(t.ext, 1));
}

TEST_CASE("multiplicative groups are cyclic of order q-1") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {2, 3}, {3, 2}, {3, 4}, {5, 2}, {7, 2}}) {
    const auto k = Field::make(p, n);
    std::uint64_t maxord = 0;
    for (std::uint32_t a = 1; a < k->size(); ++a) {
      const auto o = brute_order(*k, a);
      CHECK((k->size() - 1) % o == 0);
      maxord = std::max(maxord, o);
    }
    CHECK(maxord == k->size() - 1);
  }
}

TEST_CASE("field axioms on random samples") {
  const auto k = Field::make(3, 3);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> d(0, k->size() - 1);
  for (int s = 0; s < 1000; ++s) {
    const Fe a(k, d(rng)), b(k, d(rng)), c(k, d(rng));
    CHECK(((a + b) + c) == (a + (b + c)));
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK((a * (b + c)) == (a * b + a * c));
    CHECK((a * b) == (b * a));
    if (!a.is_zero()) CHECK((a * a.inv()) == a.one());
  }
}

TEST_CASE("reducible modulus is rejected") {
  CHECK_THROWS_AS(Field::make(3, 2, std::vector<std::uint32_t>{2, 0, 1}), ConfigError);
  CHECK_NOTHROW(Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 1}));
}

TEST_CASE("residue units") {
  const auto f3 = Field::make(3, 1);
  CHECK(residue_units(polya_T(f3)).size() == 2);
  const auto u2 = residue_units(polya_from_indices(f3, {0, 0, 1}));
  CHECK(u2.size() == 6);
  for (const auto& u : u2) CHECK(!u.coeff(0).is_zero());
  // T^2 + 1 is irreducible over F_3, so A/fA = F_9.
  CHECK(residue_units(polya_from_indices(f3, {1, 0, 1})).size() == 8);
  CHECK_THROWS_AS(residue_units(polya_const(f3, 2)), MathError);
}

TEST_CASE("unit group order formula and closure") {
  for (auto idx : std::vector<std::vector<std::uint32_t>>{{0, 1}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {0, 0, 0, 1}, {2, 1, 0, 1}}) {
    const auto f3 = Field::make(3, 1);
    const PolyA f = polya_from_indices(f3, idx);
    const ResidueRing r(f);
    double expect = r.size();
    for (const auto& p : prime_factors(f)) expect *= 1.0 - 1.0 / std::pow(3.0, static_cast<double>(p.deg()));
    CHECK(r.units().size() == static_cast<std::size_t>(std::llround(expect)));
    std::set<std::uint32_t> u(r.units().begin(), r.units().end());
    for (auto a : r.units())
      for (auto b : r.units()) CHECK(u.count(r.mul(a, b)) == 1);
    CHECK(r.units().size() + (r.size() - r.units().size()) == r.size());
  }
}

TEST_CASE("polynomial ring axioms and degrees") {
  const auto f3 = Field::make(3, 1);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint32_t> d(0, 2);
  auto rnd = [&] {
    std::vector<std::uint32_t> c(1 + d(rng) + d(rng));
    for (auto& x : c) x = d(rng);
    return polya_from_indices(f3, c);
  };
  for (int s = 0; s < 1000; ++s) {
    const PolyA a = rnd(), b = rnd(), c = rnd();
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK((a * (b + c)) == (a * b + a * c));
    CHECK((a * b) == (b * a));
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).deg() == a.deg() + b.deg());
    if (!b.is_zero()) {
      auto [qq, rr] = a.divmod(b);
      CHECK((qq * b + rr) == a);
      CHECK(rr.deg() < b.deg());
    }
  }
}

TEST_CASE("char_eval is a ring homomorphism") {
  const auto f3 = Field::make(3, 1);
  const RatFunc theta(polya_T(f3));
  auto id = [&](const Fe& c) { return RatFunc(PolyA::constant(c)); };
  const PolyA a = polya_from_indices(f3, {1, 0, 1});
  CHECK(char_eval(a, theta, id) == RatFunc(a));
  CHECK(char_eval(polya_T(f3), Fe(f3, 2), [](const Fe& c) { return c; }) == Fe(f3, 2));
  const PolyA b = polya_from_indices(f3, {2, 1});
  CHECK(char_eval(a * b, theta, id) == char_eval(a, theta, id) * char_eval(b, theta, id));
}

TEST_CASE("rational functions") {
  const auto f3 = Field::make(3, 1);
  const PolyA t = polya_T(f3);
  const RatFunc x(t + polya_const(f3, 1), t * t);
  CHECK((x * x.inv()) == x.one());
  auto [num, k] = x.to_af(t);
  CHECK(k == 2);
  CHECK(num == t + polya_const(f3, 1));
  CHECK_THROWS_AS(RatFunc(t.one(), t + t.one()).to_af(t), MathError);
}

TEST_CASE("series inversion") {
  const auto f3 = Field::make(3, 1);
  const Fe one(f3, 1), two(f3, 2), zero(f3, 0);
  const Series<Fe> s(zero, 0, {one, zero, two}, 6);
  const Series<Fe> inv = series_invert(s);
  CHECK(inv.prec() == 6);
  CHECK(inv == Series<Fe>(zero, 0, {one, zero, one, zero, one}, 6));
  CHECK((s * inv) == s.one());

  CHECK(series_invert(s.one()) == s.one());

  const Series<Fe> xs(zero, 1, {one, one}, 8);
  const Series<Fe> xi = series_invert(xs);
  CHECK(xi.lo() == -1);
  CHECK(xi.coeff(0) == two);
  CHECK((xs * xi) == xs.one());
  CHECK((xs * xi).prec() == 7);

  CHECK_THROWS_AS(series_invert(Series<Fe>(zero, 0, {one, one})), PrecisionError);
  CHECK(series_invert(Series<Fe>(zero, 0, {one, one}), 5).prec() == 5);
}

TEST_CASE("series inverse property on random samples") {
  const auto k = Field::make(3, 2);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint32_t> d(0, 8);
  for (int s = 0; s < 200; ++s) {
    std::vector<Fe> c;
    c.emplace_back(k, 1 + d(rng) % 8);
    for (int i = 0; i < 7; ++i) c.emplace_back(k, d(rng));
    const long lo = static_cast<long>(d(rng)) - 4;
    const Series<Fe> a(Fe(k, 0), lo, c, lo + 8);
    const auto prod = a * series_invert(a);
    CHECK(prod.prec() == 8);
    CHECK(prod == a.one());
  }
}

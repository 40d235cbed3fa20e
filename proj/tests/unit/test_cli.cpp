#include "doctest.h"
#include "dforge_cli/jobs.hpp"
#include "dforge_cli/selftest.hpp"

using namespace dforge;
using namespace dforge::io;

TEST_CASE("census command") {
  JobConfig c;
  c.f = "0,1";
  const Json j = cmd_census(c);
  CHECK(j["cusp_count"] == "4");
  CHECK(j["component_count"] == "1");
  CHECK(j["x0_cusp_count"] == "2");
  c.f = "0,0,1";
  CHECK(cmd_census(c)["cusp_count"] == "36");
  c.f = "1";
  CHECK_THROWS_AS(cmd_census(c), ConfigError);
  c.f = "0,,1";
  CHECK_THROWS_AS(cmd_census(c), ConfigError);
  c.f = "0,3";
  CHECK_THROWS_AS(cmd_census(c), ConfigError);
  c.q = 6;
  c.f = "0,1";
  CHECK_THROWS_AS(cmd_census(c), ConfigError);
}

TEST_CASE("field order of documents") {
  JobConfig c;
  const Json j = cmd_census(c);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"q", "f", "h", "Q", "units", "gl2_order", "sl2_order", "n_order", "h_order",
                                         "cusp_count", "component_count", "geometric_cusps", "x0_cusp_count",
                                         "formula_only"});
}

TEST_CASE("tate command") {
  JobConfig c;
  const Json j = cmd_tate(c);
  CHECK(j["Delta_valuation"] == "6");
  for (int k = 0; k < 6; ++k) {
    for (const auto& a : j["Delta"][static_cast<std::size_t>(k)]) CHECK(a["num"].empty());
  }
  CHECK(j["jinv"]["k"] == "6");
  // g[0] is the tau-coefficient lambda^{q-1} = -T of psi.
  const auto u = rank1_universal(polya_T(Field::make(3, 1)));
  CHECK(rprime_from_json(j["g"][0], u.ring) == u.psi.phi_T.coeff(1));
  CHECK(tate_to_json(tate_from_json(Json::parse(j.dump()))).dump() == j.dump());
  c.N = 1;
  CHECK_THROWS_AS(cmd_tate(c), PrecisionError);
}

TEST_CASE("reduce command round trip") {
  JobConfig c;
  c.specialise = 2;
  const Json in = cmd_tate(c);
  const Json r = cmd_reduce(Json::parse(in.dump()), 3);
  CHECK(r["stable_rank"] == "1");
  CHECK(r["k"] == "0");
  CHECK(r["lattice_generator"]["lo"] == "-3");
  CHECK(r["mu1"]["coeffs"][0] != "0");
  Json bad = in;
  bad["phi"][2] = Json{{"lo", "1"}, {"prec", "1"}, {"coeffs", Json::array()}};
  CHECK_THROWS_AS(cmd_reduce(bad, 3), PrecisionError);
  bad = in;
  bad["phi"][2] = Json{{"lo", "1"}, {"prec", "10"}, {"coeffs", {"1"}}};
  CHECK_THROWS_AS(cmd_reduce(bad, 3), MathError);
}

TEST_CASE("selftest determinism and fault injection") {
  const auto a = run_selftest(7);
  const auto b = run_selftest(7);
  const auto c = run_selftest(99);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].failures == 0);
    CHECK(b[i].samples == a[i].samples);
    CHECK(c[i].failures == 0);
  }
  CHECK(selftest_to_json(7, a).dump() == selftest_to_json(7, b).dump());
  const auto f = run_selftest(7, "skew_axioms");
  CHECK(f[0].failures == 1);
  CHECK(selftest_to_json(7, f)["verdict"] == "fail");
}

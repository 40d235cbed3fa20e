#include "dforge_cli/serialize.hpp"

#include <limits>

#include "dforge/config.hpp"

namespace dforge::io {

namespace {

constexpr const char* kExactTag = "exact";

Json prec_to_json(long prec, bool exact) { return exact ? Json(kExactTag) : num(prec); }

long prec_from_json(const Json& j, long exact_value) {
  if (j.is_string() && j.get<std::string>() == kExactTag) return exact_value;
  return parse_long(j);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q) {
  if (q < 2 || q > max_field_size()) throw ConfigError("q = " + std::to_string(q) + " is out of range");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  std::uint64_t x = q;
  while (x % p == 0) {
    x /= p;
    ++e;
  }
  if (x != 1) throw ConfigError("q = " + std::to_string(q) + " is not a prime power");
  return {static_cast<std::uint32_t>(p), e};
}

Json num(long v) { return std::to_string(v); }
Json num(std::uint64_t v) { return std::to_string(v); }

long parse_long(const Json& j) {
  if (!j.is_string()) throw ConfigError("integers are encoded as decimal strings");
  const std::string s = j.get<std::string>();
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw ConfigError("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("not a decimal integer: \"" + s + "\"");
  }
}

long get_long(const Json& j, const char* key) { return parse_long(field(j, key)); }

Json poly_to_json(const PolyA& a) {
  Json out = Json::array();
  for (const auto& c : a.coeffs()) out.push_back(num(static_cast<long>(c.index())));
  return out;
}

PolyA poly_from_json(const Json& j, const FieldPtr& fq) {
  if (!j.is_array()) throw ConfigError("polynomial must be a list of coefficients");
  std::vector<std::uint32_t> idx;
  for (const auto& c : j) {
    const long v = parse_long(c);
    if (v < 0 || static_cast<std::uint64_t>(v) >= fq->size()) throw ConfigError("coefficient outside F_q");
    idx.push_back(static_cast<std::uint32_t>(v));
  }
  return polya_from_indices(fq, idx);
}

Json af_to_json(const RatFunc& a, const PolyA& f) {
  const auto [n, k] = a.to_af(f);
  Json out;
  out["num"] = poly_to_json(n);
  out["f_power"] = num(k);
  return out;
}

RatFunc af_from_json(const Json& j, const PolyA& f) {
  return RatFunc::from_af(poly_from_json(field(j, "num"), f.zero_elem().field()), f, get_long(j, "f_power"));
}

Json rprime_to_json(const RPrime& a) {
  Json out = Json::array();
  for (const auto& c : a.coeffs()) out.push_back(af_to_json(c, a.ctx()->f));
  return out;
}

RPrime rprime_from_json(const Json& j, const RPrimeCtxPtr& ctx) {
  if (!j.is_array() || j.size() != ctx->n()) throw ConfigError("R' element needs one coordinate per lambda^i");
  std::vector<RatFunc> c;
  for (const auto& x : j) c.push_back(af_from_json(x, ctx->f));
  return RPrime(ctx, std::move(c));
}

Json xseries_to_json(const XSeries& s) {
  Json out;
  out["lo"] = num(s.lo());
  out["prec"] = prec_to_json(s.prec(), s.exact());
  Json c = Json::array();
  for (const auto& x : s.coeffs()) c.push_back(rprime_to_json(x));
  out["coeffs"] = std::move(c);
  return out;
}

XSeries xseries_from_json(const Json& j, const RPrimeCtxPtr& ctx) {
  std::vector<RPrime> c;
  for (const auto& x : field(j, "coeffs")) c.push_back(rprime_from_json(x, ctx));
  const RPrime zero = RPrime::from_polya(ctx, polya_const(ctx->base(), 0));
  return XSeries(zero, get_long(j, "lo"), std::move(c), prec_from_json(field(j, "prec"), XSeries::kExact));
}

Json lseries_to_json(const LSeries& s) {
  Json out;
  out["lo"] = num(s.lo());
  out["prec"] = prec_to_json(s.prec(), s.exact());
  Json c = Json::array();
  for (const auto& x : s.coeffs()) c.push_back(num(static_cast<long>(x.index())));
  out["coeffs"] = std::move(c);
  return out;
}

LSeries lseries_from_json(const Json& j, const FieldPtr& k) {
  std::vector<Fe> c;
  const Json& cs = field(j, "coeffs");
  if (!cs.is_array()) throw ConfigError("series coefficients must be a list");
  for (const auto& x : cs) {
    const long v = parse_long(x);
    if (v < 0 || static_cast<std::uint64_t>(v) >= k->size()) throw ConfigError("series coefficient outside the field");
    c.emplace_back(k, static_cast<std::uint32_t>(v));
  }
  return LSeries(Fe(k, 0), get_long(j, "lo"), std::move(c), prec_from_json(field(j, "prec"), LSeries::kExact));
}

Json census_to_json(const CensusReport& r, const PolyA& f) {
  Json out;
  out["q"] = num(r.q);
  out["f"] = poly_to_json(f);
  out["h"] = num(r.h);
  out["Q"] = num(static_cast<std::uint64_t>(r.Q));
  out["units"] = num(r.units);
  out["gl2_order"] = num(r.gl2_order);
  out["sl2_order"] = num(r.sl2_order);
  out["n_order"] = num(r.n_order);
  out["h_order"] = num(r.h_order);
  out["cusp_count"] = num(r.cusp_count);
  out["component_count"] = num(r.component_count);
  out["geometric_cusps"] = num(r.geometric_cusps);
  out["x0_cusp_count"] = r.x0_cusp_count ? num(*r.x0_cusp_count) : Json(nullptr);
  out["formula_only"] = r.formula_only;
  return out;
}

CensusReport census_from_json(const Json& j) {
  auto u = [&](const char* k) { return static_cast<std::uint64_t>(get_long(j, k)); };
  CensusReport r;
  r.q = u("q");
  r.h = u("h");
  r.Q = static_cast<std::uint32_t>(u("Q"));
  r.units = u("units");
  r.gl2_order = u("gl2_order");
  r.sl2_order = u("sl2_order");
  r.n_order = u("n_order");
  r.h_order = u("h_order");
  r.cusp_count = u("cusp_count");
  r.component_count = u("component_count");
  r.geometric_cusps = u("geometric_cusps");
  if (!field(j, "x0_cusp_count").is_null()) r.x0_cusp_count = u("x0_cusp_count");
  r.formula_only = field(j, "formula_only").get<bool>();
  return r;
}

TateDoc tate_doc(const TateExpansion& t) {
  const UniversalRank1& u = t.u();
  TateDoc d{t.q(), u.f, t.N, {}, {}, t.k_delta, 0, u.mu1, t.e.coeffs(), XSeries(u.mu1.zero()), XSeries(u.mu1.zero())};
  for (long k = 0; k <= t.N; ++k) {
    d.g.push_back(t.g.coeff(k));
    d.delta.push_back(t.delta.coeff(k));
  }
  const JExpansion j = j_expansion(t, polya_T(u.f.zero_elem().field()));
  d.j_k = j.k;
  d.j_alpha0 = j.alpha.coeff(0);
  const auto lam = tate_level(t);
  d.lambda_1_0 = lam.at({1, 0});
  d.lambda_0_1 = lam.at({0, 1});
  return d;
}

Json tate_to_json(const TateDoc& d) {
  Json out;
  out["q"] = num(d.q);
  out["f"] = poly_to_json(d.f);
  out["N"] = num(d.N);
  Json g = Json::array(), delta = Json::array(), e = Json::array();
  for (const auto& c : d.g) g.push_back(rprime_to_json(c));
  for (const auto& c : d.delta) delta.push_back(rprime_to_json(c));
  for (const auto& c : d.e) e.push_back(xseries_to_json(c));
  out["g"] = std::move(g);
  out["Delta"] = std::move(delta);
  out["Delta_valuation"] = num(d.k_delta);
  out["jinv"] = {{"a", poly_to_json(polya_T(d.f.zero_elem().field()))}, {"k", num(d.j_k)},
                 {"alpha0", rprime_to_json(d.j_alpha0)}};
  out["e"] = std::move(e);
  out["levels"] = {{"lambda_1_0", xseries_to_json(d.lambda_1_0)}, {"lambda_0_1", xseries_to_json(d.lambda_0_1)}};
  return out;
}

TateDoc tate_from_json(const Json& j) {
  const long q = get_long(j, "q");
  if (q < 2) throw ConfigError("q must be a prime power");
  const auto [p, e] = split_prime_power(static_cast<std::uint64_t>(q));
  const FieldPtr fq = Field::make(p, e);
  const PolyA f = poly_from_json(field(j, "f"), fq);
  const UniversalRank1 u = rank1_universal(f);
  TateDoc d{static_cast<std::uint64_t>(q), u.f, get_long(j, "N"), {}, {}, get_long(j, "Delta_valuation"), 0,
            u.mu1, {}, XSeries(u.mu1.zero()), XSeries(u.mu1.zero())};
  for (const auto& c : field(j, "g")) d.g.push_back(rprime_from_json(c, u.ring));
  for (const auto& c : field(j, "Delta")) d.delta.push_back(rprime_from_json(c, u.ring));
  const Json& jinv = field(j, "jinv");
  d.j_k = get_long(jinv, "k");
  d.j_alpha0 = rprime_from_json(field(jinv, "alpha0"), u.ring);
  for (const auto& c : field(j, "e")) d.e.push_back(xseries_from_json(c, u.ring));
  const Json& lv = field(j, "levels");
  d.lambda_1_0 = xseries_from_json(field(lv, "lambda_1_0"), u.ring);
  d.lambda_0_1 = xseries_from_json(field(lv, "lambda_0_1"), u.ring);
  return d;
}

}  // namespace dforge::io

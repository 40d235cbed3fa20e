#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dforge/cusps.hpp"
#include "dforge/reduction.hpp"
#include "dforge/tate.hpp"

namespace dforge::io {

// Field order is insertion order; every integer is a decimal string.
using Json = nlohmann::ordered_json;

// (p, e) with q = p^e; ConfigError otherwise or beyond the field bound.
std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q);

Json num(long v);
Json num(std::uint64_t v);
long get_long(const Json& j, const char* key);
long parse_long(const Json& j);

Json poly_to_json(const PolyA& a);
PolyA poly_from_json(const Json& j, const FieldPtr& fq);

// An element of A_f as {"num": [...], "f_power": k}, meaning num / f^k.
Json af_to_json(const RatFunc& a, const PolyA& f);
RatFunc af_from_json(const Json& j, const PolyA& f);

// R' elements as their lambda-basis coordinates.
Json rprime_to_json(const RPrime& a);
RPrime rprime_from_json(const Json& j, const RPrimeCtxPtr& ctx);

Json xseries_to_json(const XSeries& s);
XSeries xseries_from_json(const Json& j, const RPrimeCtxPtr& ctx);

// Series over F_{q^m}: coefficients are field encodings.
Json lseries_to_json(const LSeries& s);
LSeries lseries_from_json(const Json& j, const FieldPtr& k);

Json census_to_json(const CensusReport& r, const PolyA& f);
CensusReport census_from_json(const Json& j);

// The tate document: expansion data together with the j-expansion at a.
struct TateDoc {
  std::uint64_t q = 0;
  PolyA f;
  long N = 0;
  std::vector<RPrime> g;
  std::vector<RPrime> delta;
  long k_delta = 0;
  long j_k = 0;
  RPrime j_alpha0;
  std::vector<XSeries> e;
  XSeries lambda_1_0;
  XSeries lambda_0_1;
};

TateDoc tate_doc(const TateExpansion& t);
Json tate_to_json(const TateDoc& d);
TateDoc tate_from_json(const Json& j);

}  // namespace dforge::io

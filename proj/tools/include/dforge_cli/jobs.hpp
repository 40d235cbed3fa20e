#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dforge_cli/serialize.hpp"

namespace dforge::io {

struct JobConfig {
  std::uint64_t q = 3;
  std::string f = "0,1";  // little-endian coefficient indices
  long N = 9;
  std::size_t D = 3;
  std::uint64_t h = 1;
  std::optional<std::uint32_t> specialise;  // emit a reduce input over F_{q^m}
};

FieldPtr base_field(std::uint64_t q);
// Parses "c0,c1,..." over F_q; ConfigError on malformed or constant input.
PolyA parse_f(const std::string& csv, const FieldPtr& fq);

Json cmd_census(const JobConfig& c);
Json cmd_tate(const JobConfig& c);
Json cmd_reduce(const Json& input, std::size_t D);

// Input document for cmd_reduce: the Tate expansion specialised at the
// least point of R' over F_{q^m}, with its level structure.
Json reduce_input_from_tate(const TateExpansion& t, std::uint32_t m);

}  // namespace dforge::io

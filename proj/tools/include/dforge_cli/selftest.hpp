#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dforge_cli/serialize.hpp"

namespace dforge::io {

struct SuiteResult {
  std::string name;
  std::uint64_t samples = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
};

// Property suites with seeds derived from `seed`. `fault` names a suite
// whose checks are deliberately corrupted, to show that failures surface.
std::vector<SuiteResult> run_selftest(std::uint64_t seed, const std::string& fault = "");

Json selftest_to_json(std::uint64_t seed, const std::vector<SuiteResult>& r);

}  // namespace dforge::io

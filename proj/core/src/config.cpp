#include "dforge/config.hpp"

#include <cstdlib>
#include <string>

#include "dforge/errors.hpp"

namespace dforge {

std::uint64_t max_field_size() {
  constexpr std::uint64_t kDefault = 59049;  // 3^10
  const char* env = std::getenv("DFORGE_MAX_Q");
  if (env == nullptr || *env == '\0') return kDefault;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size() || v < 2) throw ConfigError("");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string("DFORGE_MAX_Q is not a valid bound: ") + env);
  }
}

}  // namespace dforge

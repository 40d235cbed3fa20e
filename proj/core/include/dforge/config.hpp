#pragma once

#include <cstdint>

namespace dforge {

// Largest finite field (number of elements) the library will tabulate.
// Defaults to 3^10; the DFORGE_MAX_Q environment variable overrides it.
std::uint64_t max_field_size();

}  // namespace dforge

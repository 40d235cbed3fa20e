#pragma once

#include <cstdint>
#include <vector>

namespace dforge {

// Basis of {x : M x = 0} over F_p; M is given by rows, entries in [0, p).
std::vector<std::vector<std::uint32_t>> nullspace_mod_p(std::vector<std::vector<std::uint32_t>> rows,
                                                        std::size_t cols, std::uint32_t p);

// All F_p-linear combinations of the given vectors (p^k of them).
std::vector<std::vector<std::uint32_t>> span_mod_p(const std::vector<std::vector<std::uint32_t>>& basis,
                                                   std::size_t dim, std::uint32_t p);

}  // namespace dforge

#include "dforge/linalg.hpp"

#include "dforge/errors.hpp"

namespace dforge {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1;
  std::uint64_t b = a;
  std::uint32_t e = p - 2;
  while (e != 0) {
    if ((e & 1U) != 0) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

std::vector<std::vector<std::uint32_t>> nullspace_mod_p(std::vector<std::vector<std::uint32_t>> rows,
                                                        std::size_t cols, std::uint32_t p) {
  std::vector<long> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const std::uint64_t iv = inv_mod(rows[r][c], p);
    for (auto& x : rows[r]) x = static_cast<std::uint32_t>(x * iv % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint64_t t = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        rows[i][j] = static_cast<std::uint32_t>((rows[i][j] + (p - t) * rows[r][j]) % p);
      }
    }
    pivot_col.push_back(static_cast<long>(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t fcol = 0; fcol < cols; ++fcol) {
    if (is_pivot[fcol]) continue;
    std::vector<std::uint32_t> v(cols, 0);
    v[fcol] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
      v[static_cast<std::size_t>(pivot_col[i])] = (p - rows[i][fcol]) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<std::uint32_t>> span_mod_p(const std::vector<std::vector<std::uint32_t>>& basis,
                                                   std::size_t dim, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> out{std::vector<std::uint32_t>(dim, 0)};
  for (const auto& b : basis) {
    const std::size_t n = out.size();
    for (std::uint32_t c = 1; c < p; ++c) {
      for (std::size_t i = 0; i < n; ++i) {
        auto v = out[i];
        for (std::size_t j = 0; j < dim; ++j) v[j] = (v[j] + c * b[j]) % p;
        out.push_back(std::move(v));
      }
    }
    if (out.size() > (1U << 26)) throw ConfigError("span too large to enumerate");
  }
  return out;
}

}  // namespace dforge

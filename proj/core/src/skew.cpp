#include "dforge/skew.hpp"

#include <algorithm>

#include "dforge/linalg.hpp"

namespace dforge {

std::vector<Fe> skew_kernel(const SkewPoly<Fe>& a) {
  if (a.is_zero()) throw MathError("kernel of the zero polynomial");
  const FieldPtr k = a.leading().field();
  const std::uint32_t p = k->characteristic();
  const std::uint32_t n = k->degree();
  // Column j is the image of the basis vector x^j.
  std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n, 0));
  std::uint32_t basis = 1;
  for (std::uint32_t j = 0; j < n; ++j) {
    const auto img = k->digits(a.eval(Fe(k, basis)).index());
    for (std::uint32_t i = 0; i < n; ++i) rows[i][j] = i < img.size() ? img[i] : 0;
    if (j + 1 < n) basis = k->mul(basis, k->from_digits({0, 1}));
  }
  const auto ns = nullspace_mod_p(rows, n, p);
  std::vector<Fe> out;
  for (const auto& v : span_mod_p(ns, n, p)) out.emplace_back(k, k->from_digits(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Fe> skew_kernel(const SkewPoly<Fe>& a, std::uint32_t m) {
  if (a.is_zero()) throw MathError("kernel of the zero polynomial");
  const FieldPtr k = a.leading().field();
  std::uint64_t qm = 1;
  for (std::uint32_t i = 0; i < m; ++i) qm *= a.q();
  if (qm != k->size()) throw ConfigError("coefficient field is not F_{q^m}");
  return skew_kernel(a);
}

}  // namespace dforge

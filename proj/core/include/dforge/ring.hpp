#pragma once

#include <cstdint>

namespace dforge {

// Coefficient domains used throughout the library share one informal
// contract: value types with +, -, *, unary -, ==, and the members
//   zero(), one()          constants of the same domain (context carried),
//   is_zero(), is_unit()   decidable predicates,
//   inv()                  inverse of a unit (throws MathError otherwise),
//   frobenius(q)           x -> x^q for q a power of the characteristic.
// Everything is exact; no floating point anywhere.

template <class E>
E power(const E& x, std::uint64_t n) {
  E result = x.one();
  E base = x;
  while (n != 0) {
    if ((n & 1U) != 0) result = result * base;
    n >>= 1U;
    if (n != 0) base = base * base;
  }
  return result;
}

// x^(q^k) by k successive Frobenius steps.
template <class E>
E frobenius_power(const E& x, std::uint64_t q, unsigned k) {
  E r = x;
  for (unsigned i = 0; i < k; ++i) r = r.frobenius(q);
  return r;
}

}  // namespace dforge

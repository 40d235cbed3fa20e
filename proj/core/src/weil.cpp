#include "dforge/weil.hpp"

namespace dforge {

namespace {

std::vector<Fe> psi_points(const FieldModule& phi, const PolyA& f) {
  return skew_kernel(dm_image(exterior_power2(phi), f));
}

}  // namespace

PairingContext<Fe> pairing_context_fq(const TorsionModule& tor, const PolyA& f) {
  auto basis = reference_basis(tor.phi, f, tor.points, std::less<Fe>());
  return pairing_context(tor.phi, f, std::move(basis), psi_points(tor.phi, f), std::less<Fe>());
}

PairingContext<Fe> pairing_context_fq(const TorsionModule& tor, const PolyA& f, LevelStructure<Fe> basis) {
  return pairing_context(tor.phi, f, std::move(basis), psi_points(tor.phi, f), std::less<Fe>());
}

}  // namespace dforge

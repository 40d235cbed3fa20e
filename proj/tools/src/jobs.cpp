#include "dforge_cli/jobs.hpp"

#include <sstream>

namespace dforge::io {

FieldPtr base_field(std::uint64_t q) {
  const auto [p, e] = split_prime_power(q);
  return Field::make(p, e);
}

PolyA parse_f(const std::string& csv, const FieldPtr& fq) {
  std::vector<std::uint32_t> idx;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size() || v >= fq->size()) {
      throw ConfigError("malformed f: \"" + csv + "\" (expected comma-separated indices below q)");
    }
    idx.push_back(static_cast<std::uint32_t>(v));
  }
  const PolyA f = polya_from_indices(fq, idx);
  if (f.deg() < 1) throw ConfigError("f must have positive degree");
  return f;
}

Json cmd_census(const JobConfig& c) {
  if (c.h < 1) throw ConfigError("h must be positive");
  const PolyA f = parse_f(c.f, base_field(c.q));
  return census_to_json(census(f, c.h), f);
}

Json cmd_tate(const JobConfig& c) {
  const PolyA f = parse_f(c.f, base_field(c.q));
  const TateExpansion t = tate_module(tate_lattice(rank1_universal(f)), c.N);
  if (c.specialise) return reduce_input_from_tate(t, *c.specialise);
  return tate_to_json(tate_doc(t));
}

Json reduce_input_from_tate(const TateExpansion& t, std::uint32_t m) {
  const Specialisation sp = specialisation_make(t.u(), m);
  const auto lam = tate_level(t);
  Json out;
  out["p"] = num(static_cast<long>(sp.tower.base->characteristic()));
  out["e"] = num(static_cast<long>(sp.tower.base->degree()));
  out["m"] = num(static_cast<long>(m));
  out["f"] = poly_to_json(t.u().f);
  Json phi = Json::array();
  for (const auto& c : t.phi.phi_T.coeffs()) phi.push_back(lseries_to_json(sp(c)));
  out["phi"] = std::move(phi);
  out["level"] = {lseries_to_json(sp(lam.at({1, 0}))), lseries_to_json(sp(lam.at({0, 1})))};
  return out;
}

Json cmd_reduce(const Json& in, std::size_t D) {
  const long p = get_long(in, "p"), e = get_long(in, "e"), m = get_long(in, "m");
  if (p < 2 || e < 1 || m < 1 || e > 32 || m > 32) throw ConfigError("p, e, m out of range");
  const Tower tw = field_make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e), static_cast<std::uint32_t>(m));
  if (!in.contains("f") || !in.contains("phi")) throw ConfigError("reduce input needs \"f\" and \"phi\"");
  const PolyA f = poly_from_json(in.at("f"), tw.base);
  if (f.deg() < 1) throw ConfigError("f must have positive degree");
  std::vector<LSeries> coeffs;
  for (const auto& c : in.at("phi")) coeffs.push_back(lseries_from_json(c, tw.ext));
  if (coeffs.size() < 2) throw ConfigError("phi needs at least theta and one tau coefficient");
  if (coeffs.back().is_zero()) {
    if (coeffs.back().exact()) throw ConfigError("top coefficient of phi is zero");
    throw PrecisionError("top coefficient of phi vanishes to its precision; the rank is undetermined",
                         coeffs.back().prec() + 1);
  }
  const LocalModule phi = local_module(tw, coeffs);

  const StableForm st = stable_normalize(phi, f);
  Json out;
  out["stable_rank"] = num(static_cast<long>(st.reduction_rank));
  out["k"] = num(st.k);
  if (st.reduction_rank != 1 || phi.rank() == 1) {
    out["reduction"] = st.reduction_rank == static_cast<int>(phi.rank()) ? "good reduction (rank " +
                                                                               std::to_string(phi.rank()) + ")"
                                                                         : "stable reduction of rank " +
                                                                               std::to_string(st.reduction_rank);
    Json normal = Json::array();
    for (const auto& c : st.phi.phi_T.coeffs()) normal.push_back(lseries_to_json(c));
    out["psi"] = std::move(normal);
    out["lattice_generator"] = nullptr;
    out["achieved_precision"] = nullptr;
    return out;
  }
  out["reduction"] = "stable reduction of rank 1";
  const Approximation ap = drinfeld_approx(st.phi, D);
  const LatticeRecovery lr = lattice_recover(st.phi, ap, f);
  Json psi = Json::array(), s = Json::array();
  for (const auto& c : ap.psi.phi_T.coeffs()) psi.push_back(lseries_to_json(c));
  for (const auto& c : ap.s.coeffs()) s.push_back(lseries_to_json(c));
  out["psi"] = std::move(psi);
  out["s"] = std::move(s);
  out["lattice_generator"] = lseries_to_json(lr.ell);
  out["achieved_precision"] = num(ap.precision);
  if (in.contains("level")) {
    std::vector<LSeries> basis;
    for (const auto& c : in.at("level")) basis.push_back(lseries_from_json(c, tw.ext));
    if (basis.size() != 2) throw ConfigError("level needs the images of (1,0) and (0,1)");
    const auto lam = level_make(phi, f, basis);
    const Triple tr = triple_extract(phi, lam, D);
    out["mu1"] = lseries_to_json(tr.mu.at({1}));
  } else {
    out["mu1"] = nullptr;
  }
  return out;
}

}  // namespace dforge::io

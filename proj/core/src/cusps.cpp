#include "dforge/cusps.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace dforge {

MatrixRing::MatrixRing(const PolyA& f) : r_(f) {}

Mat2 MatrixRing::mul(const Mat2& x, const Mat2& y) const {
  return {r_.add(r_.mul(x.a, y.a), r_.mul(x.b, y.c)), r_.add(r_.mul(x.a, y.b), r_.mul(x.b, y.d)),
          r_.add(r_.mul(x.c, y.a), r_.mul(x.d, y.c)), r_.add(r_.mul(x.c, y.b), r_.mul(x.d, y.d))};
}

std::uint32_t MatrixRing::det(const Mat2& x) const { return r_.sub(r_.mul(x.a, x.d), r_.mul(x.b, x.c)); }

Mat2 MatrixRing::inv(const Mat2& x) const {
  const std::uint32_t di = r_.inv(det(x));
  return {r_.mul(di, x.d), r_.mul(di, r_.neg(x.b)), r_.mul(di, r_.neg(x.c)), r_.mul(di, x.a)};
}

std::uint64_t MatrixRing::encode(const Mat2& x) const {
  const std::uint64_t n = r_.size();
  return ((static_cast<std::uint64_t>(x.a) * n + x.b) * n + x.c) * n + x.d;
}

Mat2 MatrixRing::decode(std::uint64_t k) const {
  const std::uint64_t n = r_.size();
  Mat2 x;
  x.d = static_cast<std::uint32_t>(k % n);
  k /= n;
  x.c = static_cast<std::uint32_t>(k % n);
  k /= n;
  x.b = static_cast<std::uint32_t>(k % n);
  x.a = static_cast<std::uint32_t>(k / n);
  return x;
}

std::vector<std::uint32_t> MatrixRing::unit_generators() const {
  std::vector<std::uint32_t> gens;
  std::vector<bool> in(r_.size(), false);
  in[1] = true;
  std::vector<std::uint32_t> members{1};
  for (auto u : r_.units()) {
    if (in[u]) continue;
    gens.push_back(u);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (auto g : gens) {
        const auto y = r_.mul(members[i], g);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    }
  }
  return gens;
}

std::vector<std::uint32_t> MatrixRing::additive_generators() const {
  // c T^i for c running over an F_p-basis of F_q.
  std::vector<std::uint32_t> gens;
  const auto& k = *r_.base();
  const std::uint32_t deg = static_cast<std::uint32_t>(r_.modulus().deg());
  std::uint64_t scale = 1;
  for (std::uint32_t i = 0; i < deg; ++i) {
    for (std::uint32_t j = 0; j < k.degree(); ++j) {
      std::vector<std::uint32_t> dg(k.degree(), 0);
      dg[j] = 1;
      gens.push_back(static_cast<std::uint32_t>(scale * k.from_digits(dg)));
    }
    scale *= r_.q();
  }
  return gens;
}

std::vector<Mat2> MatrixRing::gl2_generators() const {
  std::vector<Mat2> gens;
  for (auto b : additive_generators()) {
    gens.push_back({1, b, 0, 1});
    gens.push_back({1, 0, b, 1});
  }
  for (auto u : unit_generators()) gens.push_back(diag(u, 1));
  return gens;
}

std::vector<Mat2> MatrixRing::h_generators() const {
  std::vector<Mat2> gens;
  for (auto b : additive_generators()) gens.push_back({1, b, 0, 1});
  for (auto u : unit_generators()) {
    gens.push_back(diag(u, 1));
    gens.push_back(diag(1, u));
  }
  return gens;
}

Gl2Group gl2_enum(const PolyA& f) {
  auto m = std::make_shared<const MatrixRing>(f);
  if (m->order() > kMaterialiseBound) {
    throw ConfigError("Gl_2(A/fA) with |A/fA| = " + std::to_string(m->order()) +
                      " is beyond the materialisation bound " + std::to_string(kMaterialiseBound));
  }
  const std::uint64_t n4 = static_cast<std::uint64_t>(m->order()) * m->order() * m->order() * m->order();
  Gl2Group g{m, {}};
  for (std::uint64_t k = 0; k < n4; ++k) {
    const Mat2 x = m->decode(k);
    if (m->invertible(x)) g.elements.push_back(x);
  }
  return g;
}

Subgroups subgroups(const Gl2Group& g) {
  Subgroups s;
  for (const auto& x : g.elements) {
    if (g.ring->in_N(x)) s.N.push_back(x);
    if (g.ring->in_H(x)) s.H.push_back(x);
    if (g.ring->in_Sigma(x)) s.Sigma.push_back(x);
    if (g.ring->in_Sl2(x)) s.Sl2.push_back(x);
  }
  return s;
}

namespace {

bool in_coset(const MatrixRing& m, const Mat2& rep, const Mat2& x, CosetSide side) {
  const Mat2 ri = m.inv(rep);
  return m.in_N(side == CosetSide::Right ? m.mul(x, ri) : m.mul(ri, x));
}

}  // namespace

std::vector<Mat2> coset_reps(const Gl2Group& g, CosetSide side) {
  const MatrixRing& m = *g.ring;
  const auto n = subgroups(g).N;
  std::vector<bool> seen(static_cast<std::size_t>(m.encode({m.order() - 1, m.order() - 1, m.order() - 1, m.order() - 1})) + 1,
                         false);
  auto mark = [&](const Mat2& x) {
    for (const auto& y : n) seen[m.encode(side == CosetSide::Right ? m.mul(y, x) : m.mul(x, y))] = true;
  };
  auto to_sl2 = [&](const Mat2& x) {
    const Mat2 dg = m.diag(1, m.ring().inv(m.det(x)));
    return side == CosetSide::Right ? m.mul(dg, x) : m.mul(x, dg);
  };
  std::vector<Mat2> reps{m.identity()};
  mark(m.identity());
  for (const auto& x : g.elements) {
    if (seen[m.encode(x)]) continue;
    mark(x);
    reps.push_back(to_sl2(x));
  }
  return reps;
}

std::size_t coset_locate(const MatrixRing& m, const std::vector<Mat2>& reps, const Mat2& x, CosetSide side) {
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (in_coset(m, reps[i], x, side)) return i;
  }
  throw MathError("matrix lies in no listed coset");
}

std::uint64_t gl2_order_formula(const PolyA& f) {
  const std::uint64_t q = f.zero_elem().field()->size();
  PolyA rest = f.monic();
  std::uint64_t order = 1;
  for (const auto& p : prime_factors(f)) {
    long e = 0;
    while ((rest % p).is_zero()) {
      rest = rest.exact_div(p);
      ++e;
    }
    std::uint64_t np = 1;
    for (long i = 0; i < p.deg(); ++i) np *= q;
    std::uint64_t part = (np * np - 1) * (np * np - np);
    for (long i = 1; i < e; ++i) part *= np * np * np * np;
    order *= part;
  }
  return order;
}

namespace {

// Canonical key of the right coset N g: the second row normalised by a
// unit, then the least first row a*row1 + b*row2 with a in F_q^*.
std::uint64_t right_coset_key(const MatrixRing& m, const Mat2& g) {
  const ResidueRing& r = m.ring();
  std::uint32_t c = g.c, d = g.d;
  std::uint64_t best = UINT64_MAX;
  for (auto u : r.units()) {
    const std::uint64_t key = static_cast<std::uint64_t>(r.mul(u, g.c)) * r.size() + r.mul(u, g.d);
    if (key < best) {
      best = key;
      c = r.mul(u, g.c);
      d = r.mul(u, g.d);
    }
  }
  std::uint64_t row1 = UINT64_MAX;
  for (std::uint32_t a = 1; a < r.q(); ++a) {
    const std::uint32_t ra = r.mul(a, g.a), rb = r.mul(a, g.b);
    for (std::uint32_t b = 0; b < r.size(); ++b) {
      const std::uint64_t key = static_cast<std::uint64_t>(r.add(ra, r.mul(b, c))) * r.size() + r.add(rb, r.mul(b, d));
      row1 = std::min(row1, key);
    }
  }
  return row1 * r.size() * r.size() + best;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

constexpr std::size_t kCosetLimit = 2'000'000;

}  // namespace

CensusReport census(const PolyA& f, std::uint64_t h) {
  if (h == 0) throw ConfigError("class number must be positive");
  const MatrixRing m(f);
  const ResidueRing& r = m.ring();
  CensusReport rep;
  rep.q = r.q();
  rep.Q = r.size();
  rep.h = h;
  rep.units = r.units().size();
  rep.n_order = (rep.q - 1) * rep.Q * rep.units;
  rep.h_order = rep.units * rep.units * rep.Q;
  rep.formula_only = rep.Q > kEnumerateBound;

  if (!rep.formula_only) {
    const std::uint64_t n = rep.Q;
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b)
        for (std::uint64_t c = 0; c < n; ++c) {
          const std::uint32_t bc = r.mul(static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(c));
          for (std::uint64_t d = 0; d < n; ++d) {
            const std::uint32_t det = r.sub(r.mul(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(d)), bc);
            if (r.is_unit(det)) ++rep.gl2_order;
            if (det == 1) ++rep.sl2_order;
          }
        }
    if (rep.gl2_order != gl2_order_formula(f)) throw MathError("Gl_2 order disagrees with the closed formula");
  } else {
    rep.gl2_order = gl2_order_formula(f);
    rep.sl2_order = rep.gl2_order / rep.units;
  }

  const std::uint64_t denom = static_cast<std::uint64_t>(rep.Q) * (rep.q - 1);
  if (rep.sl2_order % denom != 0 || rep.gl2_order % rep.n_order != 0) {
    throw MathError("group orders are not divisible as expected");
  }
  rep.cusp_count = h * (rep.sl2_order / denom);
  rep.component_count = h * (rep.units / (rep.q - 1));
  const std::uint64_t index_n = rep.gl2_order / rep.n_order;

  if (index_n <= kCosetLimit) {
    // Walk N\Gl_2 from the identity coset under right multiplication.
    std::unordered_map<std::uint64_t, std::size_t> id;
    std::vector<Mat2> cosets;
    const auto gens = m.gl2_generators();
    id.emplace(right_coset_key(m, m.identity()), 0);
    cosets.push_back(m.identity());
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      for (const auto& s : gens) {
        const Mat2 y = m.mul(cosets[i], s);
        if (id.emplace(right_coset_key(m, y), cosets.size()).second) cosets.push_back(y);
      }
    }
    if (cosets.size() != index_n) throw MathError("coset walk disagrees with [Gl_2 : N]");
    DisjointSets ds(cosets.size());
    const auto hgens = m.h_generators();
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      for (const auto& s : hgens) ds.unite(i, id.at(right_coset_key(m, m.mul(cosets[i], s))));
    }
    std::uint64_t orbits = 0;
    for (std::size_t i = 0; i < cosets.size(); ++i) orbits += ds.find(i) == i ? 1 : 0;
    rep.x0_cusp_count = h * orbits;
  }
  rep.geometric_cusps = h * index_n;
  if (index_n * h != rep.cusp_count) throw MathError("[Gl_2 : N] differs from |Sl_2| / (Q (q - 1))");
  return rep;
}

}  // namespace dforge

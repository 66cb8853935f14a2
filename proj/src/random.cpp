#include "dmt/random.hpp"

#include <algorithm>
#include <set>

namespace dmt {

SimplicialComplex random_complex(Rng& rng, RandomComplexOptions opt) {
  std::uniform_int_distribution<unsigned> nv(opt.min_vertices, opt.max_vertices);
  const unsigned n = nv(rng);
  std::vector<Vertex> all(n);
  for (unsigned i = 0; i < n; ++i) all[i] = i;
  std::set<Simplex> closure;
  std::vector<Simplex> gens;
  std::uniform_int_distribution<int> dd(0, std::min<int>(opt.max_dim, int(n) - 1));
  for (int attempt = 0; attempt < 60; ++attempt) {
    int r = dd(rng);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Vertex> vs(all.begin(), all.begin() + r + 1);
    std::sort(vs.begin(), vs.end());
    std::set<Simplex> add;
    for (std::size_t mask = 1; mask < (std::size_t(1) << vs.size()); ++mask) {
      std::vector<Vertex> f;
      for (std::size_t b = 0; b < vs.size(); ++b)
        if (mask >> b & 1) f.push_back(vs[b]);
      Simplex s = Simplex::from_sorted(std::move(f));
      if (!closure.count(s)) add.insert(s);
    }
    if (closure.size() + add.size() + 1 > opt.max_simplices) continue;
    closure.insert(add.begin(), add.end());
    gens.push_back(Simplex::from_sorted(std::move(vs)));
  }
  return SimplicialComplex::from_maximal(gens);
}

namespace {

// does the V-trajectory digraph on S_q have a cycle through `start`
bool cycle_through(const DiscreteVectorField& v, int q, std::size_t start) {
  const auto& k = v.complex();
  std::vector<char> seen(k.count(q), 0);
  std::vector<std::size_t> stack{start};
  while (!stack.empty()) {
    auto b = stack.back();
    stack.pop_back();
    for (auto a : k.facets(q, b)) {
      auto b2 = v.up(q - 1, a);
      if (b2 == DiscreteVectorField::npos || b2 == b) continue;
      if (b2 == start) return true;
      if (!seen[b2]) {
        seen[b2] = 1;
        stack.push_back(b2);
      }
    }
  }
  return false;
}

}  // namespace

DiscreteVectorField random_gradient_field(ComplexPtr k, Rng& rng, double empty_pair_probability) {
  DiscreteVectorField v(k);
  std::vector<std::pair<int, std::pair<std::size_t, std::size_t>>> cand;
  for (int q = 1; q <= k->dim(); ++q)
    for (std::size_t b = 0; b < k->count(q); ++b)
      for (auto a : k->facets(q, b)) cand.push_back({q - 1, {a, b}});
  std::shuffle(cand.begin(), cand.end(), rng);
  for (const auto& [q, ab] : cand) {
    auto [a, b] = ab;
    if (v.matched(q, a) || v.matched(q + 1, b)) continue;
    v.pair(q, a, b);
    if (cycle_through(v, q + 1, b)) v.unpair(q, a);
  }
  std::bernoulli_distribution coin(empty_pair_probability);
  if (k->count(0) > 0 && coin(rng)) {
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < k->count(0); ++i)
      if (!v.matched(0, i)) free.push_back(i);
    if (!free.empty()) v.pair(-1, 0, free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng)]);
  }
  return v;
}

namespace {

bool simplicial(const SimplicialComplex& k, const std::map<Vertex, Vertex>& m) {
  for (const auto& s : k.maximal_simplices()) {
    std::vector<Vertex> img;
    for (Vertex v : s.vertices()) img.push_back(m.at(v));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    if (!k.contains(Simplex::from_sorted(std::move(img)))) return false;
  }
  return true;
}

}  // namespace

SimplicialMap random_simplicial_self_map(ComplexPtr k, Rng& rng) {
  auto verts = k->vertices();
  if (verts.empty()) return SimplicialMap(k, k, {});
  auto pick = [&](const auto& xs) { return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)]; };
  std::map<Vertex, Vertex> m;
  int mode = std::uniform_int_distribution<int>(0, 5)(rng);
  if (mode == 0) {
    Vertex c = pick(verts);
    for (Vertex v : verts) m[v] = c;
  } else if (mode == 1) {
    auto tops = k->maximal_simplices();
    const Simplex& s = pick(tops);
    std::vector<Vertex> sv(s.vertices().begin(), s.vertices().end());
    for (Vertex v : verts) m[v] = pick(sv);
  } else {
    for (Vertex v : verts) m[v] = v;
    std::size_t moves = std::uniform_int_distribution<std::size_t>(0, 2 * verts.size())(rng);
    for (std::size_t i = 0; i < moves; ++i) {
      Vertex v = pick(verts);
      Vertex old = m[v];
      m[v] = pick(verts);
      if (!simplicial(*k, m)) m[v] = old;
    }
  }
  return SimplicialMap(k, k, std::move(m));
}

SimplicialMap last_vertex_map(const BarycentricSubdivision& bd) {
  std::map<Vertex, Vertex> m;
  const auto& k = *bd.base;
  for (int q = 0; q <= k.dim(); ++q)
    for (std::size_t i = 0; i < k.count(q); ++i) m[bd.barycenter(q, i)] = k.simplex(q, i).back();
  return SimplicialMap(bd.complex, bd.base, std::move(m));
}

RandomEndomorphism random_endomorphism(ComplexPtr k, Rng& rng) {
  int kind = std::uniform_int_distribution<int>(0, 6)(rng);
  switch (kind) {
    case 0:
      return {ChainMap::identity(k), "identity"};
    case 1:
      return {ChainMap::zero(k, k), "zero"};
    case 2:
    case 3:
      return {induced_chain_map(random_simplicial_self_map(k, rng)), "induced"};
    case 4: {
      // C(K) -> C(Bd K) -> C(K), then a random self-map
      auto bd = barycentric_subdivision(k);
      ChainMap back = compose(induced_chain_map(last_vertex_map(bd)), subdivision_chain_map(bd));
      return {compose(induced_chain_map(random_simplicial_self_map(k, rng)), back), "subdivision"};
    }
    case 5: {
      auto bd = barycentric_subdivision(k);
      auto f = random_simplicial_self_map(k, rng);
      // Bd K -> K -> K, then back through the subdivision map
      ChainMap m = compose(induced_chain_map(compose(f, last_vertex_map(bd))), subdivision_chain_map(bd));
      return {m, "subdivision"};
    }
    default: {
      std::uniform_int_distribution<int> c(-3, 3);
      auto f = induced_chain_map(random_simplicial_self_map(k, rng));
      return {ChainMap::identity(k).scaled(c(rng)) + f.scaled(c(rng)), "combination"};
    }
  }
}

}  // namespace dmt

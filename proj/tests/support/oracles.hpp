#pragma once

// Independent reference computations used only by the tests. They work on
// Simplex values and explicit enumeration, never on the library's index tables
// or dynamic programming.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <random>
#include <vector>

#include "dmt/builders.hpp"
#include "dmt/chain_map.hpp"
#include "dmt/linalg.hpp"

namespace oracle {

using dmt::Integer;
using dmt::Simplex;

inline std::map<Simplex, Simplex> up_map(const dmt::DiscreteVectorField& v) {
  std::map<Simplex, Simplex> m;
  for (const auto& [a, b] : v.pairs())
    if (!a.empty()) m[a] = b;
  return m;
}

inline std::map<Simplex, Simplex> down_map(const dmt::DiscreteVectorField& v) {
  std::map<Simplex, Simplex> m;
  for (const auto& [a, b] : v.pairs())
    if (!a.empty()) m[b] = a;
  return m;
}

// every V-trajectory from sigma, explicitly, summing weights per end simplex
inline std::map<Simplex, Integer> enumerate_trajectories(const dmt::DiscreteVectorField& v, const Simplex& sigma) {
  auto up = up_map(v);
  std::map<Simplex, Integer> out;
  std::vector<std::pair<Simplex, Integer>> stack{{sigma, 1}};
  while (!stack.empty()) {
    auto [b, w] = stack.back();
    stack.pop_back();
    out[b] += w;
    if (b.dim() < 1) continue;
    for (std::size_t i = 0; i < b.size(); ++i) {
      Simplex a = b.without(i);
      auto it = up.find(a);
      if (it == up.end() || it->second == b) continue;
      Integer step = -dmt::incidence_number(b, a) * dmt::incidence_number(it->second, a);
      stack.push_back({it->second, w * step});
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline std::map<Simplex, Integer> enumerate_co_trajectories(const dmt::DiscreteVectorField& v, const Simplex& sigma) {
  auto down = down_map(v);
  const auto& k = v.complex();
  auto verts = k.vertices();
  std::map<Simplex, Integer> out;
  std::vector<std::pair<Simplex, Integer>> stack{{sigma, 1}};
  while (!stack.empty()) {
    auto [b, w] = stack.back();
    stack.pop_back();
    out[b] += w;
    for (auto x : verts) {
      if (b.contains(x)) continue;
      Simplex t = b.with(x);
      if (!k.contains(t)) continue;
      auto it = down.find(t);
      if (it == down.end() || it->second == b) continue;
      Integer step = -dmt::incidence_number(t, b) * dmt::incidence_number(t, it->second);
      stack.push_back({it->second, w * step});
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline std::map<Simplex, Integer> as_map(const dmt::SimplicialComplex& k, const dmt::Chain& c) {
  std::map<Simplex, Integer> m;
  for (const auto& t : c.terms()) m[k.simplex(c.dim(), t.index)] = t.coeff;
  return m;
}

// fraction-free elimination on arbitrary precision integers
inline boost::multiprecision::cpp_int bareiss(const dmt::DenseIntMatrix& a) {
  using boost::multiprecision::cpp_int;
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  std::vector<std::vector<cpp_int>> m(n, std::vector<cpp_int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
  cpp_int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// sum over simplices fixed with sign by a simplicial self-map
inline Integer lefschetz(const dmt::SimplicialMap& f) {
  const auto& k = f.source();
  Integer total = 0;
  for (int q = 0; q <= k.dim(); ++q)
    for (const auto& s : k.simplices(q)) {
      std::vector<dmt::Vertex> img;
      for (auto v : s.vertices()) img.push_back(f(v));
      int sign = dmt::sort_with_sign(img);
      if (sign != 0 && Simplex::from_sorted(img) == s) total += (q % 2 == 0 ? sign : -sign);
    }
  return total;
}

// For a circle tower: walk Bd^k(C_N) from vertex 0 and send position i to base position i mod N.
// `flip` walks the other way round the subdivided circle.
inline dmt::SimplicialMap wrap_map(const dmt::SubdivisionTower& t, bool flip) {
  auto neighbours = [](const dmt::SimplicialComplex& k) {
    std::vector<dmt::Vertex> n;
    for (const auto& e : k.simplices(1))
      if (e[0] == 0) n.push_back(e[1]);
      else if (e[1] == 0) n.push_back(e[0]);
    std::sort(n.begin(), n.end());
    return n;
  };
  auto base = dmt::cycle_order(*t.base, 0, neighbours(*t.base).front());
  auto nt = neighbours(*t.top());
  auto top = dmt::cycle_order(*t.top(), 0, flip ? nt.back() : nt.front());
  std::map<dmt::Vertex, dmt::Vertex> m;
  for (std::size_t i = 0; i < top.size(); ++i) m[top[i]] = base[i % base.size()];
  return dmt::SimplicialMap(t.top(), t.base, m);
}

// the sphere fixtures used throughout
struct NamedSphere {
  std::string name;
  dmt::SphereWitness witness;
};

inline dmt::SphereWitness s0() {
  auto k = dmt::share(dmt::SimplicialComplex::from_maximal(std::vector<Simplex>{{0}, {1}}));
  std::vector<dmt::SimplexPair> p{{Simplex{}, Simplex{0}}};
  return dmt::SphereWitness::certify(dmt::DiscreteVectorField::from_pairs(k, p));
}

inline dmt::SphereWitness octahedron() {
  auto sq = dmt::gvf_join(s0(), s0());
  auto sqw = dmt::SphereWitness::certify(sq.field);
  return dmt::SphereWitness::certify(dmt::gvf_join(sqw, s0()).field);
}

inline std::vector<NamedSphere> spheres() {
  std::vector<NamedSphere> r;
  r.push_back({"C_3", dmt::build_zp_circle(3, 1).witness});
  r.push_back({"C_6", dmt::build_zp_circle(3, 2).witness});
  r.push_back({"octahedron", octahedron()});
  r.push_back({"boundary of the 4-simplex", dmt::sphere_skeleton_witness(4)});
  r.push_back({"C_3 * C_3", dmt::join_zp_spheres(dmt::build_zp_circle(3, 1), dmt::build_zp_circle(3, 1)).witness});
  return r;
}

}  // namespace oracle

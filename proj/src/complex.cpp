#include "dmt/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "dmt/error.hpp"

namespace dmt {

SimplicialComplex::SimplicialComplex() = default;

SimplicialComplex SimplicialComplex::from_maximal(std::span<const Simplex> generators,
                                                  std::span<const Vertex> extra_vertices) {
  SimplicialComplex k;
  int top = -1;
  for (const auto& g : generators) top = std::max(top, g.dim());
  if (!extra_vertices.empty()) top = std::max(top, 0);
  k.cells_.assign(top + 1, {});
  for (const auto& g : generators)
    if (!g.empty()) k.cells_[g.dim()].push_back(g);
  for (Vertex v : extra_vertices) k.cells_[0].push_back(Simplex::from_sorted({v}));
  // close downwards one level at a time
  for (int q = top; q >= 0; --q) {
    auto& level = k.cells_[q];
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    if (q == 0) break;
    auto& below = k.cells_[q - 1];
    for (const auto& s : level)
      for (std::size_t i = 0; i < s.size(); ++i) below.push_back(s.without(i));
  }
  k.build_tables();
  return k;
}

void SimplicialComplex::build_tables() {
  const int d = dim();
  index_.assign(d + 1, {});
  facets_.assign(d + 1, {});
  cof_offset_.assign(d + 1, {});
  cof_.assign(d + 1, {});
  for (int q = 0; q <= d; ++q) {
    auto& idx = index_[q];
    idx.reserve(cells_[q].size() * 2);
    for (std::size_t i = 0; i < cells_[q].size(); ++i) idx.emplace(cells_[q][i], i);
  }
  for (int q = 1; q <= d; ++q) {
    auto& f = facets_[q];
    f.resize(cells_[q].size() * (q + 1));
    for (std::size_t i = 0; i < cells_[q].size(); ++i) {
      const Simplex& s = cells_[q][i];
      for (int j = 0; j <= q; ++j) f[i * (q + 1) + j] = index_[q - 1].at(s.without(j));
    }
  }
  for (int q = 0; q < d; ++q) {
    std::vector<std::size_t> deg(cells_[q].size() + 1, 0);
    const auto& f = facets_[q + 1];
    for (std::size_t x : f) ++deg[x + 1];
    std::partial_sum(deg.begin(), deg.end(), deg.begin());
    cof_offset_[q] = deg;
    cof_[q].resize(f.size());
    std::vector<std::size_t> fill(deg.begin(), deg.end() - 1);
    // iterating cofacets in increasing index keeps each list sorted
    for (std::size_t i = 0; i < cells_[q + 1].size(); ++i)
      for (int j = 0; j <= q + 1; ++j) {
        std::size_t x = f[i * (q + 2) + j];
        cof_[q][fill[x]++] = Cofacet{i, (j % 2 == 0) ? 1 : -1};
      }
  }
  empty_cof_.clear();
  if (d >= 0)
    for (std::size_t i = 0; i < cells_[0].size(); ++i) empty_cof_.push_back(Cofacet{i, 1});
}

std::size_t SimplicialComplex::count(int q) const {
  if (q == -1) return 1;
  if (q < -1 || q > dim()) return 0;
  return cells_[q].size();
}

std::size_t SimplicialComplex::size() const {
  std::size_t n = 1;
  for (const auto& c : cells_) n += c.size();
  return n;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int q) const {
  static const std::vector<Simplex> empty_level{Simplex{}};
  static const std::vector<Simplex> none;
  if (q == -1) return empty_level;
  if (q < -1 || q > dim()) return none;
  return cells_[q];
}

std::optional<std::size_t> SimplicialComplex::find(const Simplex& s) const {
  if (s.empty()) return 0;
  int q = s.dim();
  if (q > dim()) return std::nullopt;
  auto it = index_[q].find(s);
  if (it == index_[q].end()) return std::nullopt;
  return it->second;
}

std::size_t SimplicialComplex::index_of(const Simplex& s) const {
  auto i = find(s);
  if (!i) throw DomainError("simplex " + to_string(s) + " is not in the complex");
  return *i;
}

std::span<const std::size_t> SimplicialComplex::facets(int q, std::size_t i) const {
  if (q <= 0 || q > dim()) return {};
  return std::span<const std::size_t>(facets_[q]).subspan(i * (q + 1), q + 1);
}

std::span<const Cofacet> SimplicialComplex::cofacets(int q, std::size_t i) const {
  if (q == -1) return empty_cof_;
  if (q < 0 || q >= dim()) return {};
  const auto& off = cof_offset_[q];
  return std::span<const Cofacet>(cof_[q]).subspan(off[i], off[i + 1] - off[i]);
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::vector<Vertex> r;
  for (const auto& s : simplices(0)) r.push_back(s[0]);
  return r;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> r;
  for (int q = 0; q <= dim(); ++q)
    for (std::size_t i = 0; i < count(q); ++i)
      if (cofacets(q, i).empty()) r.push_back(cells_[q][i]);
  return r;
}

Vertex SimplicialComplex::max_vertex() const {
  if (count(0) == 0) throw DomainError("complex has no vertices");
  return cells_[0].back()[0];
}

SimplicialComplex SimplicialComplex::without_maximal(const Simplex& s) const {
  auto i = index_of(s);
  if (s.empty() || !cofacets(s.dim(), i).empty())
    throw DomainError("simplex " + to_string(s) + " is not maximal");
  std::vector<Simplex> gens;
  for (int q = 0; q <= dim(); ++q)
    for (const auto& t : cells_[q])
      if (t != s) gens.push_back(t);
  return from_maximal(gens);
}

void SimplicialComplex::set_labels(std::vector<std::string> labels) {
  if (!labels.empty()) {
    if (labels.size() != count(0)) throw DomainError("one label per vertex is required");
    for (std::size_t i = 0; i < count(0); ++i)
      if (cells_[0][i][0] != i) throw DomainError("labelled complexes need vertex ids 0..n-1");
  }
  labels_ = std::move(labels);
}

bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b) {
  return &a == &b || a == b;
}

SimplicialComplex skeleton_of_simplex(int n, int q) {
  if (n < 0 || q < 0 || q > n) throw DomainError("skeleton needs 0 <= q <= n");
  if (n > 24) throw DomainError("simplex dimension too large");
  std::vector<Simplex> gens;
  std::vector<bool> mask(n + 1, false);
  std::fill(mask.begin(), mask.begin() + q + 1, true);
  do {
    std::vector<Vertex> vs;
    for (int i = 0; i <= n; ++i)
      if (mask[i]) vs.push_back(static_cast<Vertex>(i));
    gens.push_back(Simplex::from_sorted(std::move(vs)));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return SimplicialComplex::from_maximal(gens);
}

SimplicialComplex cone(Vertex apex, const SimplicialComplex& k) {
  if (k.contains(Simplex::from_sorted({apex})))
    throw DomainError("cone apex " + std::to_string(apex) + " is already a vertex");
  std::vector<Simplex> gens{Simplex::from_sorted({apex})};
  for (const auto& m : k.maximal_simplices()) gens.push_back(m.with(apex));
  return SimplicialComplex::from_maximal(gens);
}

Simplex JoinResult::embed(const Simplex& left, const Simplex& right_part) const {
  std::vector<Vertex> vs(left.vertices().begin(), left.vertices().end());
  for (Vertex v : right_part.vertices()) vs.push_back(right(v));
  return Simplex::from_sorted(std::move(vs));
}

JoinResult join(const SimplicialComplex& a, const SimplicialComplex& b) {
  JoinResult r;
  if (b.count(0) > 0) {
    std::int64_t start = a.count(0) > 0 ? std::int64_t(a.max_vertex()) + 1 : 0;
    r.right_offset = start - std::int64_t(b.vertices().front());
  }
  auto ma = a.maximal_simplices();
  auto mb = b.maximal_simplices();
  if (ma.empty()) ma.push_back(Simplex{});
  if (mb.empty()) mb.push_back(Simplex{});
  std::vector<Simplex> gens;
  for (const auto& s : ma)
    for (const auto& t : mb) gens.push_back(r.embed(s, t));
  r.complex = SimplicialComplex::from_maximal(gens);
  return r;
}

Vertex BarycentricSubdivision::barycenter(const Simplex& s) const {
  if (s.empty()) throw DomainError("the empty simplex has no barycenter");
  return barycenter(s.dim(), base->index_of(s));
}

CellId BarycentricSubdivision::carrier(Vertex v) const {
  for (int q = static_cast<int>(offset.size()) - 1; q >= 0; --q)
    if (v >= offset[q]) {
      if (v - offset[q] >= base->count(q)) break;
      return CellId{q, v - offset[q]};
    }
  throw DomainError("vertex " + std::to_string(v) + " is not a barycenter");
}

BarycentricSubdivision barycentric_subdivision(ComplexPtr k) {
  BarycentricSubdivision bd;
  bd.base = k;
  std::size_t off = 0;
  for (int q = 0; q <= k->dim(); ++q) {
    bd.offset.push_back(off);
    off += k->count(q);
  }
  std::vector<Simplex> gens;
  for (const auto& m : k->maximal_simplices()) {
    std::vector<Vertex> perm(m.vertices().begin(), m.vertices().end());
    do {
      std::vector<Vertex> flag;
      std::vector<Vertex> prefix;
      for (Vertex v : perm) {
        prefix.push_back(v);
        std::vector<Vertex> sorted = prefix;
        std::sort(sorted.begin(), sorted.end());
        flag.push_back(bd.barycenter(Simplex::from_sorted(std::move(sorted))));
      }
      std::sort(flag.begin(), flag.end());
      gens.push_back(Simplex::from_sorted(std::move(flag)));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  bd.complex = share(SimplicialComplex::from_maximal(gens));
  return bd;
}

SubdivisionTower SubdivisionTower::build(ComplexPtr k, int iterations) {
  if (iterations < 0) throw DomainError("iteration count must be non-negative");
  SubdivisionTower t;
  t.base = k;
  for (int i = 0; i < iterations; ++i) t.levels.push_back(barycentric_subdivision(t.top()));
  return t;
}

PseudomanifoldReport is_pseudomanifold(const SimplicialComplex& k) {
  PseudomanifoldReport r;
  const int d = k.dim();
  if (d < 0) {
    r.reason = "complex is empty";
    return r;
  }
  for (const auto& m : k.maximal_simplices())
    if (m.dim() != d) {
      r.reason = "not pure: maximal simplex of lower dimension";
      r.witness = {m};
      return r;
    }
  if (d == 0) {
    if (k.count(0) != 2) {
      r.reason = "a 0-dimensional pseudomanifold has exactly two vertices";
      return r;
    }
    r.ok = true;
    return r;
  }
  for (std::size_t i = 0; i < k.count(d - 1); ++i)
    if (k.cofacets(d - 1, i).size() != 2) {
      r.reason = "codimension-one face not in exactly two top simplices";
      r.witness = {k.simplex(d - 1, i)};
      return r;
    }
  // facet graph connectivity
  std::vector<char> seen(k.count(d), 0);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = 1;
  while (!todo.empty()) {
    auto i = todo.front();
    todo.pop();
    for (auto f : k.facets(d, i))
      for (const auto& c : k.cofacets(d - 1, f))
        if (!seen[c.index]) {
          seen[c.index] = 1;
          todo.push(c.index);
        }
  }
  for (std::size_t i = 0; i < k.count(d); ++i)
    if (!seen[i]) {
      r.reason = "facet graph is disconnected";
      r.witness = {k.simplex(d, 0), k.simplex(d, i)};
      return r;
    }
  r.ok = true;
  return r;
}

std::vector<Vertex> cycle_order(const SimplicialComplex& k, Vertex start, Vertex toward) {
  if (k.dim() != 1) throw DomainError("cycle_order needs a 1-dimensional complex");
  const std::size_t n = k.count(0);
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : k.simplices(1)) {
    auto a = k.index_of(Simplex::from_sorted({e[0]}));
    auto b = k.index_of(Simplex::from_sorted({e[1]}));
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (const auto& a : adj)
    if (a.size() != 2) throw DomainError("complex is not a cycle");
  std::size_t s = k.index_of(Simplex::from_sorted({start}));
  std::vector<std::size_t> order{s};
  std::size_t prev = s, cur = adj[s][0];
  while (cur != s) {
    order.push_back(cur);
    std::size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = nxt;
  }
  if (order.size() != n) throw DomainError("complex is not a single cycle");
  std::size_t t = k.index_of(Simplex::from_sorted({toward}));
  auto pos = std::size_t(std::find(order.begin(), order.end(), t) - order.begin());
  if (pos > n - pos) std::reverse(order.begin() + 1, order.end());
  std::vector<Vertex> r;
  for (auto i : order) r.push_back(k.simplex(0, i)[0]);
  return r;
}

}  // namespace dmt

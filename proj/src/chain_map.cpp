#include "dmt/chain_map.hpp"

#include <algorithm>

namespace dmt {

ChainMap::ChainMap(ComplexPtr src, ComplexPtr tgt, std::vector<std::vector<Chain>> columns)
    : src_(std::move(src)), tgt_(std::move(tgt)), cols_(std::move(columns)) {
  if (static_cast<int>(cols_.size()) != src_->dim() + 1) throw DomainError("chain map needs one column list per dimension");
  for (int q = 0; q <= src_->dim(); ++q) {
    if (cols_[q].size() != src_->count(q)) throw DomainError("chain map column count mismatch");
    for (auto& c : cols_[q]) {
      if (c.is_zero()) {
        c = Chain(q);
        continue;
      }
      if (c.dim() != q) throw DomainError("chain map does not preserve degree");
      check_chain(*tgt_, c);
    }
  }
}

ChainMap ChainMap::identity(ComplexPtr k) {
  std::vector<std::vector<Chain>> cols(k->dim() + 1);
  for (int q = 0; q <= k->dim(); ++q)
    for (std::size_t i = 0; i < k->count(q); ++i) cols[q].push_back(Chain::unit(q, i));
  return ChainMap(k, k, std::move(cols));
}

ChainMap ChainMap::zero(ComplexPtr src, ComplexPtr tgt) {
  std::vector<std::vector<Chain>> cols(src->dim() + 1);
  for (int q = 0; q <= src->dim(); ++q) cols[q].assign(src->count(q), Chain(q));
  return ChainMap(src, tgt, std::move(cols));
}

Chain ChainMap::apply(const Chain& c) const {
  if (c.is_zero()) return Chain(c.dim());
  check_chain(*src_, c);
  const int q = c.dim();
  if (q < 0 || q > src_->dim()) return Chain(q);
  std::vector<Term> out;
  for (const auto& t : c.terms())
    for (const auto& u : cols_[q][t.index].terms()) out.push_back({u.index, checked_mul(u.coeff, t.coeff)});
  return Chain::from_terms(q, std::move(out));
}

ChainMap ChainMap::operator+(const ChainMap& o) const {
  if (!same_complex(*src_, *o.src_) || !same_complex(*tgt_, *o.tgt_))
    throw DomainError("adding chain maps between different complexes");
  auto cols = cols_;
  for (std::size_t q = 0; q < cols.size(); ++q)
    for (std::size_t i = 0; i < cols[q].size(); ++i) cols[q][i] += o.cols_[q][i];
  return ChainMap(src_, tgt_, std::move(cols));
}

ChainMap ChainMap::scaled(Integer f) const {
  auto cols = cols_;
  for (auto& level : cols)
    for (auto& c : level) c = c.scaled(f);
  return ChainMap(src_, tgt_, std::move(cols));
}

SimplicialMap::SimplicialMap(ComplexPtr src, ComplexPtr tgt, std::map<Vertex, Vertex> vertex_map)
    : src_(std::move(src)), tgt_(std::move(tgt)), map_(std::move(vertex_map)) {
  for (Vertex v : src_->vertices())
    if (!map_.count(v)) throw DomainError("vertex map is missing vertex " + std::to_string(v));
  for (const auto& [v, w] : map_) {
    if (!src_->contains(Simplex::from_sorted({v}))) throw DomainError("vertex map names unknown vertex " + std::to_string(v));
    if (!tgt_->contains(Simplex::from_sorted({w}))) throw DomainError("vertex " + std::to_string(w) + " is not in the target");
  }
  for (const auto& m : src_->maximal_simplices())
    if (!tgt_->contains(image(m)))
      throw DomainError("map is not simplicial: image of " + to_string(m) + " is not a simplex");
}

Vertex SimplicialMap::operator()(Vertex v) const {
  auto it = map_.find(v);
  if (it == map_.end()) throw DomainError("vertex " + std::to_string(v) + " is not in the source");
  return it->second;
}

Simplex SimplicialMap::image(const Simplex& s) const {
  std::vector<Vertex> vs;
  for (Vertex v : s.vertices()) vs.push_back((*this)(v));
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return Simplex::from_sorted(std::move(vs));
}

SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g) {
  if (!same_complex(g.target(), f.source())) throw DomainError("maps are not composable");
  std::map<Vertex, Vertex> m;
  for (const auto& [v, w] : g.vertex_map()) m[v] = f(w);
  return SimplicialMap(g.source_ptr(), f.target_ptr(), std::move(m));
}

ChainMap induced_chain_map(const SimplicialMap& f) {
  const auto& src = f.source();
  std::vector<std::vector<Chain>> cols(src.dim() + 1);
  for (int q = 0; q <= src.dim(); ++q)
    for (const auto& s : src.simplices(q)) {
      std::vector<Vertex> img;
      for (Vertex v : s.vertices()) img.push_back(f(v));
      int sign = sort_with_sign(img);
      if (sign == 0) cols[q].push_back(Chain(q));
      else cols[q].push_back(Chain::unit(q, f.target().index_of(Simplex::from_sorted(std::move(img))), sign));
    }
  return ChainMap(f.source_ptr(), f.target_ptr(), std::move(cols));
}

ChainMapCheck verify_chain_map(const ChainMap& phi, Execution exec) {
  const auto& src = phi.source();
  const auto& tgt = phi.target();
  ChainMapCheck r;
  for (int q = 1; q <= src.dim(); ++q) {
    std::vector<char> bad(src.count(q), 0);
    parallel_for(src.count(q), exec, [&](std::size_t i) {
      Chain lhs = boundary(tgt, phi.column(q, i));
      Chain rhs = phi.apply(boundary(src, Chain::unit(q, i)));
      bad[i] = !(lhs == rhs);
    });
    for (std::size_t i = 0; i < bad.size(); ++i)
      if (bad[i]) {
        r.ok = false;
        r.dim = q;
        r.witness = src.simplex(q, i);
        return r;
      }
  }
  return r;
}

namespace {

// b * c for a chain c of the subdivision, b a fresh barycenter
Chain cone_on_chain(const SimplicialComplex& bdk, Vertex b, const Chain& c, int q) {
  std::vector<Term> out;
  for (const auto& t : c.terms()) {
    const Simplex& s = bdk.simplex(q - 1, t.index);
    std::vector<Vertex> vs{b};
    vs.insert(vs.end(), s.vertices().begin(), s.vertices().end());
    int sign = sort_with_sign(vs);
    if (sign == 0) throw IntegrityError("barycenter already in subdivided chain");
    out.push_back({bdk.index_of(Simplex::from_sorted(std::move(vs))), sign > 0 ? t.coeff : checked_neg(t.coeff)});
  }
  return Chain::from_terms(q, std::move(out));
}

}  // namespace

ChainMap subdivision_chain_map(const BarycentricSubdivision& bd, Execution exec) {
  const auto& k = *bd.base;
  const auto& bdk = *bd.complex;
  std::vector<std::vector<Chain>> cols(k.dim() + 1);
  for (int q = 0; q <= k.dim(); ++q) {
    cols[q].resize(k.count(q));
    parallel_for(k.count(q), exec, [&](std::size_t i) {
      Vertex b = bd.barycenter(q, i);
      if (q == 0) {
        cols[0][i] = Chain::unit(0, bdk.index_of(Simplex::from_sorted({b})));
        return;
      }
      // g(ds) from the previous level
      std::vector<Term> acc;
      auto f = k.facets(q, i);
      for (int j = 0; j <= q; ++j)
        for (const auto& t : cols[q - 1][f[j]].terms())
          acc.push_back({t.index, j % 2 == 0 ? t.coeff : checked_neg(t.coeff)});
      cols[q][i] = cone_on_chain(bdk, b, Chain::from_terms(q - 1, std::move(acc)), q);
    });
  }
  return ChainMap(bd.base, bd.complex, std::move(cols));
}

ChainMap subdivision_chain_map(const SubdivisionTower& tower, Execution exec) {
  ChainMap g = ChainMap::identity(tower.base);
  for (const auto& level : tower.levels) g = compose(subdivision_chain_map(level, exec), g, exec);
  return g;
}

ChainMap compose(const ChainMap& phi, const ChainMap& psi, Execution exec) {
  if (!same_complex(psi.target(), phi.source())) throw DomainError("chain maps are not composable");
  const auto& src = psi.source();
  std::vector<std::vector<Chain>> cols(src.dim() + 1);
  for (int q = 0; q <= src.dim(); ++q) {
    cols[q].resize(src.count(q));
    parallel_for(src.count(q), exec, [&](std::size_t i) { cols[q][i] = phi.apply(psi.column(q, i)); });
  }
  return ChainMap(psi.source_ptr(), phi.target_ptr(), std::move(cols));
}

}  // namespace dmt

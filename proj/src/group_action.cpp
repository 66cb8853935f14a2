#include "dmt/group_action.hpp"

#include <algorithm>
#include <set>

namespace dmt {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

GroupAction::GroupAction(ComplexPtr k, unsigned p, std::map<Vertex, Vertex> generator)
    : k_(std::move(k)), p_(p), gen_(std::move(generator)) {
  if (!is_prime(p_)) throw DomainError("group order " + std::to_string(p_) + " is not prime");
  auto verts = k_->vertices();
  std::set<Vertex> image;
  for (Vertex v : verts) {
    auto it = gen_.find(v);
    if (it == gen_.end()) throw DomainError("generator is missing vertex " + std::to_string(v));
    image.insert(it->second);
  }
  if (gen_.size() != verts.size() || image != std::set<Vertex>(verts.begin(), verts.end()))
    throw DomainError("generator is not a permutation of the vertices");
  for (const auto& m : k_->maximal_simplices())
    if (!k_->contains(apply(m))) throw DomainError("generator is not simplicial at " + to_string(m));
  bool identity = true;
  for (Vertex v : verts) {
    // apply() reduces powers mod p, so walk the cycle by hand
    Vertex w = v;
    for (unsigned i = 0; i < p_; ++i) w = gen_.at(w);
    if (w != v) throw DomainError("generator does not have order " + std::to_string(p_));
    if (gen_.at(v) != v) identity = false;
  }
  if (identity) throw DomainError("generator is the identity");
}

Vertex GroupAction::apply(Vertex v, unsigned power) const {
  for (unsigned i = 0; i < power % p_; ++i) {
    auto it = gen_.find(v);
    if (it == gen_.end()) throw DomainError("vertex " + std::to_string(v) + " is not acted on");
    v = it->second;
  }
  return v;
}

Simplex GroupAction::apply(const Simplex& s, unsigned power) const {
  std::vector<Vertex> vs;
  for (Vertex v : s.vertices()) vs.push_back(apply(v, power));
  return Simplex(std::move(vs));
}

GroupAction::Freeness GroupAction::check_free() const {
  // p is prime, so any non-identity power generates the group and has the
  // same fixed simplices as the generator itself
  Freeness r;
  for (int q = 0; q <= k_->dim(); ++q)
    for (const auto& s : k_->simplices(q))
      if (apply(s) == s) {
        r.free = false;
        r.witness = s;
        return r;
      }
  return r;
}

GroupAction join_action(const GroupAction& a, const GroupAction& b, const JoinResult& j, ComplexPtr joined) {
  if (a.order() != b.order()) throw DomainError("joined actions have different orders");
  std::map<Vertex, Vertex> g;
  for (const auto& [v, w] : a.generator()) g[v] = w;
  for (const auto& [v, w] : b.generator()) g[j.right(v)] = j.right(w);
  return GroupAction(std::move(joined), a.order(), std::move(g));
}

GroupAction induced_action_on_bd(const GroupAction& a, const BarycentricSubdivision& bd) {
  if (!same_complex(a.complex(), *bd.base)) throw DomainError("action lives on a different complex");
  std::map<Vertex, Vertex> g;
  const auto& k = *bd.base;
  for (int q = 0; q <= k.dim(); ++q)
    for (std::size_t i = 0; i < k.count(q); ++i) g[bd.barycenter(q, i)] = bd.barycenter(a.apply(k.simplex(q, i)));
  return GroupAction(bd.complex, a.order(), std::move(g));
}

EquivarianceCheck verify_equivariance(const SimplicialMap& f, const GroupAction& src, const GroupAction& tgt) {
  if (!same_complex(f.source(), src.complex()) || !same_complex(f.target(), tgt.complex()))
    throw DomainError("actions do not match the map's complexes");
  if (src.order() != tgt.order()) throw DomainError("actions have different orders");
  EquivarianceCheck r;
  for (Vertex v : f.source().vertices())
    if (f(src.apply(v)) != tgt.apply(f(v))) {
      r.ok = false;
      r.witness = v;
      return r;
    }
  return r;
}

}  // namespace dmt

#include "dmt/sphere.hpp"

#include <cstdlib>
#include <deque>

namespace dmt {

SphereWitness SphereWitness::certify(DiscreteVectorField v) {
  auto pm = is_pseudomanifold(v.complex());
  if (!pm.ok) throw DomainError("not a pseudomanifold: " + pm.reason);
  std::optional<GradientField> g;
  try {
    g.emplace(std::move(v));
  } catch (const DomainError& e) {
    throw IntegrityError(std::string("sphere witness rejected: ") + e.what());
  }
  SphereWitness w(std::move(*g));
  const auto& crit = w.field_.partition().critical;
  const int d = w.dim();
  auto census = [&] {
    std::string s;
    for (int q = 0; q <= d; ++q) s += " " + std::to_string(crit[q].size());
    return s;
  };
  if (d == 0) {
    if (crit[0].size() != 2) throw IntegrityError("sphere witness needs two critical vertices, census" + census());
    // base is the vertex paired with the empty simplex, else the smaller one
    auto e = w.field_.field().empty_partner();
    w.base_ = e ? *e : crit[0][0];
    w.top_ = crit[0][0] == w.base_ ? crit[0][1] : crit[0][0];
    return w;
  }
  for (int q = 0; q <= d; ++q) {
    std::size_t want = (q == 0 || q == d) ? 1 : 0;
    if (crit[q].size() != want)
      throw IntegrityError("sphere witness needs one critical vertex and one critical top simplex, census" + census());
  }
  w.top_ = crit[d][0];
  w.base_ = crit[0][0];
  if (!boundary(w.complex(), w.field_.critical_chain(d, w.top_)).is_zero())
    throw IntegrityError("critical chain of the top simplex is not a cycle");
  return w;
}

OrientationVector orientation_from_witness(const SphereWitness& w) {
  const int d = w.dim();
  if (d < 1) throw DomainError("orientations need dimension at least 1");
  Chain c = w.field().critical_chain(d, w.top_cell());
  const auto& k = w.complex();
  if (c.support_size() != k.count(d)) throw IntegrityError("top critical chain does not cover every top simplex");
  OrientationVector xi(k.count(d));
  for (const auto& t : c.terms()) {
    if (t.coeff != 1 && t.coeff != -1) throw IntegrityError("top critical chain has a coefficient other than +-1");
    xi[t.index] = static_cast<int>(t.coeff);
  }
  return xi;
}

std::vector<OrientationVector> solve_orientations(const SimplicialComplex& k) {
  const int d = k.dim();
  if (d < 1) throw DomainError("orientations need dimension at least 1");
  if (!is_pseudomanifold(k).ok) throw DomainError("not a pseudomanifold");
  OrientationVector xi(k.count(d), 0);
  xi[0] = 1;
  std::deque<std::size_t> todo{0};
  while (!todo.empty()) {
    auto i = todo.front();
    todo.pop_front();
    auto f = k.facets(d, i);
    for (int j = 0; j <= d; ++j) {
      int s1 = j % 2 == 0 ? 1 : -1;
      for (const auto& c : k.cofacets(d - 1, f[j])) {
        if (c.index == i) continue;
        int want = -s1 * c.sign * xi[i];
        if (xi[c.index] == 0) {
          xi[c.index] = want;
          todo.push_back(c.index);
        } else if (xi[c.index] != want) {
          return {};
        }
      }
    }
  }
  OrientationVector neg = xi;
  for (auto& x : neg) x = -x;
  return {xi, neg};
}

Chain fundamental_cycle(const SimplicialComplex& k, const OrientationVector& xi) {
  if (xi.size() != k.count(k.dim())) throw DomainError("orientation has the wrong length");
  std::vector<Integer> v(xi.begin(), xi.end());
  return Chain::from_dense(k.dim(), v);
}

Integer degree_of_chain_map(const ChainMap& phi, const SimplicialComplex& k, const OrientationVector& xi) {
  if (!phi.is_endomorphism() || !same_complex(phi.source(), k)) throw DomainError("degree needs an endomorphism of the sphere");
  auto check = verify_chain_map(phi);
  if (!check.ok) throw IntegrityError("not a chain map at " + to_string(check.witness));
  Chain fund = fundamental_cycle(k, xi);
  Chain img = phi.apply(fund);
  Integer m = checked_mul(img.coefficient(0), xi[0]);
  if (!(img == fund.scaled(m))) throw IntegrityError("image of the fundamental cycle is not a multiple of it");
  return m;
}

Integer degree_of_chain_map(const ChainMap& phi, const SphereWitness& w) {
  return degree_of_chain_map(phi, w.complex(), orientation_from_witness(w));
}

Integer combinatorial_degree(const SimplicialMap& f, const SubdivisionTower& tower, const SphereWitness& w_bd) {
  if (!same_complex(f.source(), *tower.top()) || !same_complex(f.target(), *tower.base))
    throw DomainError("map must go from the subdivided sphere to the sphere");
  if (!same_complex(w_bd.complex(), *tower.top())) throw DomainError("witness must live on the subdivided sphere");
  ChainMap phi = compose(subdivision_chain_map(tower), induced_chain_map(f));
  return degree_of_chain_map(phi, w_bd);
}

OrientationVector subdivision_orientation(const SubdivisionTower& tower, const OrientationVector& base) {
  OrientationVector xi = base;
  for (const auto& bd : tower.levels) {
    const auto& k = *bd.base;
    const auto& b = *bd.complex;
    const int d = k.dim();
    if (xi.size() != k.count(d)) throw DomainError("orientation has the wrong length");
    OrientationVector next(b.count(d));
    for (std::size_t i = 0; i < b.count(d); ++i) {
      // vertices sorted by id are the flag s_0 < s_1 < ... < s_d
      const Simplex& flag = b.simplex(d, i);
      int sign = 1;
      Simplex prev = k.simplex(bd.carrier(flag[0]));
      for (int q = 1; q <= d; ++q) {
        Simplex cur = k.simplex(bd.carrier(flag[q]));
        sign *= (q % 2 == 0 ? 1 : -1) * incidence_number(cur, prev);
        prev = cur;
      }
      next[i] = sign * xi[k.index_of(prev)];
    }
    xi = std::move(next);
  }
  return xi;
}

Integer degree_oracle_preimage(const SimplicialMap& f, const OrientationVector& src, const OrientationVector& tgt) {
  const auto& l = f.source();
  const auto& k = f.target();
  const int d = k.dim();
  if (l.dim() != d || d < 1) throw DomainError("degree needs spheres of the same positive dimension");
  std::vector<Integer> count(k.count(d), 0);
  for (std::size_t i = 0; i < l.count(d); ++i) {
    std::vector<Vertex> img;
    for (Vertex v : l.simplex(d, i).vertices()) img.push_back(f(v));
    int s = sort_with_sign(img);
    if (s == 0) continue;
    auto t = k.index_of(Simplex::from_sorted(std::move(img)));
    count[t] = checked_add(count[t], s * src[i] * tgt[t]);
  }
  for (auto c : count)
    if (c != count[0]) throw IntegrityError("signed preimage counts differ between top simplices");
  return count[0];
}

DegreeModP verify_degree_mod_p(const SimplicialMap& f, const SubdivisionTower& tower, const SphereWitness& w_bd,
                               const GroupAction& a_src, const GroupAction& a_tgt) {
  if (a_src.order() != a_tgt.order()) throw DomainError("hypothesis failed: actions have different orders");
  if (!same_complex(a_src.complex(), f.source()) || !same_complex(a_tgt.complex(), f.target()))
    throw DomainError("hypothesis failed: actions live on the wrong complexes");
  if (auto fr = a_src.check_free(); !fr.free)
    throw DomainError("hypothesis failed: source action fixes " + to_string(fr.witness));
  if (auto fr = a_tgt.check_free(); !fr.free)
    throw DomainError("hypothesis failed: target action fixes " + to_string(fr.witness));
  if (auto eq = verify_equivariance(f, a_src, a_tgt); !eq.ok)
    throw DomainError("hypothesis failed: map is not equivariant at vertex " + std::to_string(eq.witness));
  DegreeModP r;
  r.p = a_src.order();
  r.degree = combinatorial_degree(f, tower, w_bd);
  r.residue = mod_floor(r.degree, r.p);
  return r;
}

ConeCheck cone_lemma_check(const SimplicialMap& f, const SphereWitness& w) {
  const auto& s = w.complex();
  const int d = s.dim();
  if (f.target().dim() > d) throw DomainError("target dimension exceeds the sphere dimension");
  for (const auto& m : s.maximal_simplices())
    if (!f.source().contains(m)) throw DomainError("sphere is not contained in the map's source");
  auto xi = orientation_from_witness(w);
  std::vector<Term> out;
  for (std::size_t i = 0; i < s.count(d); ++i) {
    std::vector<Vertex> img;
    for (Vertex v : s.simplex(d, i).vertices()) img.push_back(f(v));
    int sign = sort_with_sign(img);
    if (sign == 0) continue;
    out.push_back({f.target().index_of(Simplex::from_sorted(std::move(img))), Integer(sign * xi[i])});
  }
  ConeCheck r;
  r.image = Chain::from_terms(d, std::move(out));
  r.zero = r.image.is_zero();
  return r;
}

bool odd_dimension_check(const SphereWitness& w, const GroupAction& a) {
  if (!same_complex(w.complex(), a.complex())) throw DomainError("action lives on a different complex");
  if (auto fr = a.check_free(); !fr.free) throw DomainError("action is not free: fixes " + to_string(fr.witness));
  return a.order() == 2 || w.dim() % 2 == 1;
}

}  // namespace dmt

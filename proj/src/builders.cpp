#include "dmt/builders.hpp"

#include <set>

namespace dmt {

namespace {

std::vector<SimplexPair> skeleton_pairs(const SimplicialComplex& k, int n) {
  const Vertex apex = static_cast<Vertex>(n);
  std::vector<Vertex> f;
  for (int i = 0; i < n; ++i) f.push_back(static_cast<Vertex>(i));
  const Simplex facet = Simplex::from_sorted(f);
  std::vector<SimplexPair> pairs;
  for (int q = -1; q <= n - 2; ++q)
    for (const auto& a : k.simplices(q))
      if (!a.contains(apex) && a != facet) pairs.emplace_back(a, a.with(apex));
  return pairs;
}

void require_collapsibility_witness(const DiscreteVectorField& v) {
  GradientField g(v);
  const auto& crit = g.partition();
  if (crit.total_critical() != 1 || crit.critical[0].size() != 1 || !v.empty_partner())
    throw DomainError("not a collapsibility witness: need a single critical vertex paired with the empty simplex");
}

}  // namespace

ComplexWithField gvf_skeleton_minus_facet(int n) {
  if (n < 1) throw DomainError("n must be at least 1");
  std::vector<Vertex> f;
  for (int i = 0; i < n; ++i) f.push_back(static_cast<Vertex>(i));
  auto k = share(skeleton_of_simplex(n, n - 1).without_maximal(Simplex::from_sorted(f)));
  auto pairs = skeleton_pairs(*k, n);
  return {k, DiscreteVectorField::from_pairs(k, pairs)};
}

SphereWitness sphere_skeleton_witness(int n) {
  if (n < 1) throw DomainError("n must be at least 1");
  auto k = share(skeleton_of_simplex(n, n - 1));
  auto pairs = skeleton_pairs(*k, n);
  return SphereWitness::certify(DiscreteVectorField::from_pairs(k, pairs));
}

ComplexWithField gvf_cone_transfer(const DiscreteVectorField& v, Vertex apex) {
  require_collapsibility_witness(v);
  auto c = share(cone(apex, v.complex()));
  std::vector<SimplexPair> pairs;
  for (const auto& [a, b] : v.pairs()) pairs.emplace_back(a.with(apex), b.with(apex));
  return {c, DiscreteVectorField::from_pairs(c, pairs)};
}

ComplexWithField gvf_cone_collapse(const DiscreteVectorField& v, Vertex apex) {
  auto t = gvf_cone_transfer(v, apex);
  auto pairs = t.field.pairs();
  for (const auto& p : v.pairs()) pairs.push_back(p);
  return {t.complex, DiscreteVectorField::from_pairs(t.complex, pairs)};
}

namespace {

struct CollapseState {
  std::vector<std::vector<char>> alive;     // [q+1][i]
  std::vector<std::vector<std::size_t>> cof;  // alive cofacet count, [q+1][i]
  std::set<CellId> free;
  std::vector<SimplexPair> pairs;
};

class Collapser {
 public:
  Collapser(const SimplicialComplex& k, const std::vector<Simplex>& keep) : k_(k) {
    const int d = k.dim();
    kept_.resize(d + 2);
    for (int q = -1; q <= d; ++q) kept_[q + 1].assign(k.count(q), 0);
    bool keep_vertex = false;
    for (const auto& s : keep) {
      auto i = k.find(s);
      if (!i) throw DomainError("kept simplex " + to_string(s) + " is not in the complex");
      // faces of kept simplices are kept
      std::vector<Vertex> vs(s.vertices().begin(), s.vertices().end());
      for (std::size_t mask = 0; mask < (std::size_t(1) << vs.size()); ++mask) {
        std::vector<Vertex> f;
        for (std::size_t b = 0; b < vs.size(); ++b)
          if (mask >> b & 1) f.push_back(vs[b]);
        Simplex face = Simplex::from_sorted(std::move(f));
        kept_[face.dim() + 1][k.index_of(face)] = 1;
      }
      if (!s.empty()) keep_vertex = true;
    }
    allow_empty_ = !keep_vertex;
    if (allow_empty_) kept_[0][0] = 0;
  }

  CollapseState initial() const {
    CollapseState s;
    const int d = k_.dim();
    s.alive.resize(d + 2);
    s.cof.resize(d + 2);
    for (int q = -1; q <= d; ++q) {
      s.alive[q + 1].assign(k_.count(q), 1);
      s.cof[q + 1].resize(k_.count(q));
      for (std::size_t i = 0; i < k_.count(q); ++i) s.cof[q + 1][i] = k_.cofacets(q, i).size();
    }
    for (int q = -1; q <= d; ++q)
      for (std::size_t i = 0; i < k_.count(q); ++i) refresh(s, {q, i});
    return s;
  }

  bool is_free(const CollapseState& s, CellId c) const {
    return s.alive[c.dim + 1][c.index] && !kept_[c.dim + 1][c.index] && s.cof[c.dim + 1][c.index] == 1 &&
           (c.dim >= 0 || allow_empty_);
  }

  void refresh(CollapseState& s, CellId c) const {
    if (is_free(s, c)) s.free.insert(c);
    else s.free.erase(c);
  }

  std::size_t alive_cofacet(const CollapseState& s, CellId c) const {
    for (const auto& cf : k_.cofacets(c.dim, c.index))
      if (s.alive[c.dim + 2][cf.index]) return cf.index;
    throw IntegrityError("free face without a cofacet");
  }

  void kill(CollapseState& s, CellId c, std::vector<CellId>& touched) const {
    s.alive[c.dim + 1][c.index] = 0;
    touched.push_back(c);
    if (c.dim == 0) {
      --s.cof[0][0];
      touched.push_back({-1, 0});
    }
    for (auto f : k_.facets(c.dim, c.index)) {
      --s.cof[c.dim][f];
      touched.push_back({c.dim - 1, f});
    }
  }

  void apply(CollapseState& s, CellId a) const {
    CellId b{a.dim + 1, alive_cofacet(s, a)};
    s.pairs.emplace_back(k_.simplex(a), k_.simplex(b));
    std::vector<CellId> touched;
    kill(s, b, touched);
    kill(s, a, touched);
    for (auto c : touched) refresh(s, c);
  }

  bool finished(const CollapseState& s) const {
    for (std::size_t q = 0; q < s.alive.size(); ++q)
      for (std::size_t i = 0; i < s.alive[q].size(); ++i)
        if (s.alive[q][i] && !kept_[q][i] && !(q == 0 && !allow_empty_)) return false;
    return true;
  }

  std::vector<Simplex> remaining(const CollapseState& s) const {
    std::vector<Simplex> r;
    for (int q = 0; q <= k_.dim(); ++q)
      for (std::size_t i = 0; i < k_.count(q); ++i)
        if (s.alive[q + 1][i]) r.push_back(k_.simplex(q, i));
    return r;
  }

  // limited discrepancy search: at most `budget` non-first choices
  bool search(CollapseState& s, int budget) const {
    while (!s.free.empty()) {
      if (budget == 0) {
        apply(s, *s.free.begin());
        continue;
      }
      std::vector<CellId> options(s.free.begin(), s.free.end());
      for (std::size_t o = 0; o < options.size(); ++o) {
        CollapseState t = s;
        apply(t, options[o]);
        if (search(t, budget - (o == 0 ? 0 : 1))) {
          s = std::move(t);
          return true;
        }
      }
      return false;
    }
    return finished(s);
  }

 private:
  const SimplicialComplex& k_;
  std::vector<std::vector<char>> kept_;
  bool allow_empty_ = true;
};

}  // namespace

CollapseResult greedy_collapse(ComplexPtr k, const std::vector<Simplex>& keep, CollapseOptions opt) {
  if (opt.backtrack_depth < 0) throw DomainError("backtrack depth must be non-negative");
  Collapser c(*k, keep);
  CollapseResult r;
  CollapseState greedy = c.initial();
  if (c.search(greedy, 0)) {
    r.success = true;
    r.field = DiscreteVectorField::from_pairs(k, greedy.pairs);
    return r;
  }
  r.remaining = c.remaining(greedy);
  if (opt.backtrack_depth > 0) {
    CollapseState s = c.initial();
    if (c.search(s, opt.backtrack_depth)) {
      r.success = true;
      r.remaining.clear();
      r.field = DiscreteVectorField::from_pairs(k, s.pairs);
    }
  }
  return r;
}

JoinedField gvf_join(const SphereWitness& c, const SphereWitness& d) {
  const auto& kc = c.complex();
  const auto& kd = d.complex();
  const auto& vc = c.field().field();
  const auto& vd = d.field().field();
  JoinResult jr = join(kc, kd);
  ComplexPtr jk = share(jr.complex);
  const Simplex c0 = kc.simplex(0, c.base_vertex());
  const Simplex d0 = kd.simplex(0, d.base_vertex());
  const Simplex dn = kd.simplex(d.dim(), d.top_cell());
  auto J = [&](const Simplex& s, const Simplex& t) { return jr.embed(s, t); };
  const auto& pc = c.field().partition();
  const auto& pd = d.field().partition();
  std::vector<SimplexPair> pairs;
  // step 1
  for (int q = -1; q <= kc.dim(); ++q)
    for (const auto& s : kc.simplices(q)) pairs.emplace_back(J(s, {}), J(s, d0));
  // step 2
  for (int q = 0; q <= kd.dim(); ++q)
    for (auto t : pd.up[q]) pairs.emplace_back(J({}, kd.simplex(q, t)), J({}, kd.simplex(q + 1, vd.up(q, t))));
  // step 3
  for (int q = 0; q <= kc.dim(); ++q)
    for (auto s : pc.up[q])
      for (int r = 0; r <= kd.dim(); ++r)
        for (const auto& t : kd.simplices(r))
          if (t != d0) pairs.emplace_back(J(kc.simplex(q, s), t), J(kc.simplex(q + 1, vc.up(q, s)), t));
  // step 4
  for (int q = 0; q <= kc.dim(); ++q)
    for (auto s : pc.critical[q])
      for (int r = 0; r <= kd.dim(); ++r)
        for (auto t : pd.up[r])
          pairs.emplace_back(J(kc.simplex(q, s), kd.simplex(r, t)), J(kc.simplex(q, s), kd.simplex(r + 1, vd.up(r, t))));
  // step 5
  pairs.emplace_back(J({}, dn), J(c0, dn));
  auto field = DiscreteVectorField::from_pairs(jk, pairs);
  return JoinedField{std::move(jr), jk, std::move(field)};
}

namespace {

SphereWitness collapse_all_but(const ComplexPtr& k, const Simplex& top, CollapseOptions opt) {
  auto rest = share(k->without_maximal(top));
  auto r = greedy_collapse(rest, {}, opt);
  if (!r.success)
    throw CollapseError("collapse of the complement of " + to_string(top) + " got stuck with " +
                            std::to_string(r.remaining.size()) + " simplices left",
                        r.remaining);
  auto pairs = r.field->pairs();
  return SphereWitness::certify(DiscreteVectorField::from_pairs(k, pairs));
}

}  // namespace

SubdividedWitness sphere_witness_bd(const SphereWitness& s, CollapseOptions opt) {
  auto bd = barycentric_subdivision(s.complex_ptr());
  const int d = s.dim();
  const Vertex b = bd.barycenter(d, s.top_cell());
  const auto& tops = bd.complex->simplices(d);
  for (const auto& t : tops)
    if (t.contains(b)) return {bd, collapse_all_but(bd.complex, t, opt)};
  throw IntegrityError("barycenter of the top cell lies in no top simplex");
}

std::optional<SphereWitness> find_sphere_witness(ComplexPtr k, CollapseOptions opt) {
  if (!is_pseudomanifold(*k).ok) return std::nullopt;
  for (const auto& t : k->simplices(k->dim())) {
    try {
      return collapse_all_but(k, t, opt);
    } catch (const IntegrityError&) {
    }
  }
  return std::nullopt;
}

ZpSphere build_zp_circle(unsigned p, unsigned m) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (m < 1 || std::uint64_t(m) * p < 3) throw DomainError("need m >= 1 and m*p >= 3");
  const Vertex n = m * p;
  std::vector<Simplex> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back(Simplex::from_sorted({i, i + 1}));
  edges.push_back(Simplex::from_sorted({0, n - 1}));
  auto k = share(SimplicialComplex::from_maximal(edges));
  const Vertex j = (n - 1) / 2;  // [j, j+1] stays critical
  std::vector<SimplexPair> pairs;
  for (Vertex i = 1; i <= j; ++i) pairs.emplace_back(Simplex::from_sorted({i}), Simplex::from_sorted({i - 1, i}));
  for (Vertex i = j + 1; i < n; ++i)
    pairs.emplace_back(Simplex::from_sorted({i}), i + 1 < n ? Simplex::from_sorted({i, i + 1}) : Simplex::from_sorted({0, i}));
  auto w = SphereWitness::certify(DiscreteVectorField::from_pairs(k, pairs));
  std::map<Vertex, Vertex> g;
  for (Vertex i = 0; i < n; ++i) g[i] = (i + m) % n;
  GroupAction a(k, p, std::move(g));
  if (!a.is_free()) throw IntegrityError("rotation action is not free");
  return {std::move(w), std::move(a)};
}

ZpSphere join_zp_spheres(const ZpSphere& a, const ZpSphere& b) {
  auto jf = gvf_join(a.witness, b.witness);
  auto w = SphereWitness::certify(jf.field);
  auto act = join_action(a.action, b.action, jf.join, jf.complex);
  return {std::move(w), std::move(act)};
}

ZpTower subdivide_zp_sphere(const ZpSphere& s, int iterations, CollapseOptions opt) {
  if (iterations < 0) throw DomainError("iteration count must be non-negative");
  ZpTower t{SubdivisionTower{s.witness.complex_ptr(), {}}, {s.witness}, {s.action}};
  for (int i = 0; i < iterations; ++i) {
    auto sw = sphere_witness_bd(t.witnesses.back(), opt);
    t.actions.push_back(induced_action_on_bd(t.actions.back(), sw.bd));
    t.tower.levels.push_back(sw.bd);
    t.witnesses.push_back(std::move(sw.witness));
  }
  return t;
}

}  // namespace dmt

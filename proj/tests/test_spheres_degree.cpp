#include <doctest.h>

#include "dmt/random.hpp"
#include "oracles.hpp"

using namespace dmt;

namespace {

std::map<Vertex, Vertex> rotation(unsigned n, unsigned by) {
  std::map<Vertex, Vertex> m;
  for (Vertex i = 0; i < n; ++i) m[i] = (i + by) % n;
  return m;
}

bool is_cycle(const SimplicialComplex& k, const OrientationVector& xi) {
  return boundary(k, fundamental_cycle(k, xi)).is_zero();
}

OrientationVector negate(OrientationVector v) {
  for (auto& x : v) x = -x;
  return v;
}

// the equivariant wrap C_24 -> C_6 (whichever walking direction commutes with the actions)
struct Wrap {
  ZpSphere base;
  ZpTower tower;
  SimplicialMap f;
};

Wrap equivariant_wrap() {
  auto z = build_zp_circle(3, 2);
  auto t = subdivide_zp_sphere(z, 2);
  for (bool flip : {false, true}) {
    auto f = oracle::wrap_map(t.tower, flip);
    if (verify_equivariance(f, t.top_action(), z.action).ok) return {z, t, f};
  }
  throw std::runtime_error("no equivariant wrap");
}

}  // namespace

TEST_CASE("sphere witness certification") {
  for (const auto& s : oracle::spheres()) {
    CHECK_MESSAGE(is_pseudomanifold(s.witness.complex()).ok, s.name);
    auto co = s.witness.field().co_critical_chain(0, s.witness.base_vertex());
    CHECK(co.support_size() == s.witness.complex().count(0));
    for (const auto& t : co.terms()) CHECK_MESSAGE(t.coeff == 1, s.name);
  }
  // not a pseudomanifold
  auto star = share(SimplicialComplex::from_maximal(std::vector<Simplex>{{0, 1}, {0, 2}, {0, 3}}));
  CHECK_THROWS_AS(SphereWitness::certify(DiscreteVectorField(star)), DomainError);
  // too many critical cells
  auto c3 = share(skeleton_of_simplex(2, 1));
  CHECK_THROWS_AS(SphereWitness::certify(DiscreteVectorField(c3)), IntegrityError);
  auto s0 = oracle::s0();
  CHECK(s0.dim() == 0);
}

TEST_CASE("orientations") {
  auto c6 = build_zp_circle(3, 2).witness;
  auto xi = orientation_from_witness(c6);
  CHECK(xi.size() == 6);
  CHECK(xi[c6.top_cell()] == 1);
  CHECK(is_cycle(c6.complex(), xi));
  // the hexagon's edges in lex order: [0,1],[0,5],[1,2],[2,3],[3,4],[4,5]
  CHECK(std::count(xi.begin(), xi.end(), -1) == 1);

  auto oct = oracle::octahedron();
  auto xo = orientation_from_witness(oct);
  CHECK(xo.size() == 8);
  CHECK(is_cycle(oct.complex(), xo));

  for (const auto& s : oracle::spheres()) {
    auto x = orientation_from_witness(s.witness);
    auto sols = solve_orientations(s.witness.complex());
    REQUIRE(sols.size() == 2);
    CHECK(sols[1] == negate(sols[0]));
    CHECK(((sols[0] == x) || (sols[1] == x)));
    CHECK(is_cycle(s.witness.complex(), negate(x)));
  }
  // RP^2 on six vertices: a pseudomanifold, not orientable
  std::vector<Simplex> rp2{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                           {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};
  auto rp = SimplicialComplex::from_maximal(rp2);
  REQUIRE(is_pseudomanifold(rp).ok);
  CHECK(solve_orientations(rp).empty());
}

TEST_CASE("top coefficients of cycles share one absolute value") {
  Rng rng(3);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (const auto& s : oracle::spheres()) {
    const auto& k = s.witness.complex();
    int d = s.witness.dim();
    auto xi = orientation_from_witness(s.witness);
    auto fund = fundamental_cycle(k, xi);
    for (int t = 0; t < 5; ++t) {
      auto e = random_endomorphism(s.witness.complex_ptr(), rng);
      // any integer combination of images of cycles is a cycle
      Chain c = e.map.apply(fund).scaled(coef(rng));
      c += s.witness.field().critical_chain(d, s.witness.top_cell()).scaled(coef(rng));
      REQUIRE(boundary(k, c).is_zero());
      Integer m = c.coefficient(0) * xi[0];
      CHECK(c == fund.scaled(m));
      for (const auto& term : c.terms()) CHECK(std::abs(term.coeff) == std::abs(m));
    }
  }
  // a subdivided sphere has the same property
  auto bd = barycentric_subdivision(oracle::octahedron().complex_ptr());
  auto g = subdivision_chain_map(bd);
  auto oc = oracle::octahedron();
  auto img = g.apply(fundamental_cycle(oc.complex(), orientation_from_witness(oc)));
  CHECK(img.support_size() == bd.complex->count(2));
  for (const auto& term : img.terms()) CHECK(std::abs(term.coeff) == 1);
}

TEST_CASE("degree of chain maps") {
  auto w = build_zp_circle(3, 2).witness;
  auto k = w.complex_ptr();
  CHECK(degree_of_chain_map(ChainMap::identity(k), w) == 1);
  auto half = induced_chain_map(SimplicialMap(k, k, rotation(6, 3)));
  CHECK(degree_of_chain_map(half, w) == 1);
  CHECK(degree_of_chain_map(ChainMap::zero(k, k), w) == 0);
  // reflection
  std::map<Vertex, Vertex> refl;
  for (Vertex i = 0; i < 6; ++i) refl[i] = (6 - i) % 6;
  auto r = induced_chain_map(SimplicialMap(k, k, refl));
  CHECK(degree_of_chain_map(r, w) == -1);
  auto xi = orientation_from_witness(w);
  CHECK(degree_of_chain_map(r, *k, negate(xi)) == -1);
  // not a chain map
  std::vector<std::vector<Chain>> cols(2);
  for (std::size_t i = 0; i < 6; ++i) cols[0].push_back(Chain::unit(0, i));
  for (std::size_t i = 0; i < 6; ++i) cols[1].push_back(Chain::unit(1, 0));
  CHECK_THROWS_AS(degree_of_chain_map(ChainMap(k, k, cols), w), IntegrityError);

  // swapping orientation never changes the degree
  Rng rng(10);
  for (const auto& s : oracle::spheres())
    for (int t = 0; t < 5; ++t) {
      auto e = random_endomorphism(s.witness.complex_ptr(), rng);
      auto x = orientation_from_witness(s.witness);
      CHECK(degree_of_chain_map(e.map, s.witness.complex(), x) ==
            degree_of_chain_map(e.map, s.witness.complex(), negate(x)));
    }
}

TEST_CASE("combinatorial degree") {
  auto w = build_zp_circle(3, 2).witness;
  auto t0 = SubdivisionTower::build(w.complex_ptr(), 0);
  auto id = SimplicialMap(w.complex_ptr(), w.complex_ptr(), rotation(6, 0));
  CHECK(combinatorial_degree(id, t0, w) == 1);
  auto xi = orientation_from_witness(w);
  CHECK(degree_oracle_preimage(id, xi, xi) == 1);

  auto wr = equivariant_wrap();
  const auto& top = wr.tower.top_witness();
  CHECK(top.complex().count(1) == 24);
  CHECK(combinatorial_degree(wr.f, wr.tower.tower, top) == 4);
  auto src = subdivision_orientation(wr.tower.tower, xi);
  CHECK(is_cycle(top.complex(), src));
  CHECK(degree_oracle_preimage(wr.f, src, xi) == 4);
  // the orientation carried through the subdivision matches the one read off the witness
  auto from_w = orientation_from_witness(top);
  CHECK(((from_w == src) || (from_w == negate(src))));
  // and equals the image of the fundamental cycle under g^2
  auto g = subdivision_chain_map(wr.tower.tower);
  CHECK(g.apply(fundamental_cycle(w.complex(), xi)) == fundamental_cycle(top.complex(), src));

  // the other walking direction has degree -4
  auto flip = oracle::wrap_map(wr.tower.tower, true);
  auto plain = oracle::wrap_map(wr.tower.tower, false);
  CHECK(std::abs(combinatorial_degree(flip, wr.tower.tower, top)) == 4);
  CHECK(combinatorial_degree(flip, wr.tower.tower, top) == -combinatorial_degree(plain, wr.tower.tower, top));

  // folding C_24 back and forth over C_6 has degree 0
  std::map<Vertex, Vertex> fold;
  auto walk = cycle_order(*wr.tower.tower.top(), 0, [&] {
    for (const auto& e : wr.tower.tower.top()->simplices(1))
      if (e[0] == 0) return e[1];
    return Vertex{0};
  }());
  auto base = cycle_order(w.complex(), 0, 1);
  for (std::size_t i = 0; i < walk.size(); ++i) fold[walk[i]] = base[std::min(i, 24 - i) / 4];
  SimplicialMap folded(wr.tower.tower.top(), wr.tower.tower.base, fold);
  CHECK(combinatorial_degree(folded, wr.tower.tower, top) == 0);
  CHECK(degree_oracle_preimage(folded, src, xi) == 0);

  // edge collapse into a single vertex
  std::map<Vertex, Vertex> constant;
  for (auto v : top.complex().vertices()) constant[v] = 0;
  SimplicialMap c(wr.tower.tower.top(), wr.tower.tower.base, constant);
  CHECK(combinatorial_degree(c, wr.tower.tower, top) == 0);
  CHECK(degree_oracle_preimage(c, src, xi) == 0);

  CHECK_THROWS_AS(combinatorial_degree(id, wr.tower.tower, top), DomainError);
}

TEST_CASE("Z_p circles") {
  auto a = build_zp_circle(3, 2);
  CHECK(a.witness.complex().count(0) == 6);
  CHECK(a.action.generator().at(0) == 2);
  CHECK(a.action.is_free());
  auto b = build_zp_circle(2, 2);
  CHECK(b.witness.complex().count(0) == 4);
  CHECK(b.action.generator().at(0) == 2);
  CHECK(b.action.is_free());
  auto c = build_zp_circle(3, 1);
  CHECK(c.witness.complex().count(0) == 3);
  CHECK(c.action.is_free());
  CHECK_THROWS_AS(build_zp_circle(2, 1), DomainError);
  CHECK_THROWS_AS(build_zp_circle(4, 2), DomainError);
  for (unsigned p : {2u, 3u, 5u, 7u})
    for (unsigned m = 1; m <= 3; ++m) {
      if (p * m < 3) continue;
      auto z = build_zp_circle(p, m);
      CHECK(z.action.order() == p);
      CHECK(z.action.is_free());
      CHECK(critical_simplices(z.witness.field().field()).total_critical() == 2);
    }
}

TEST_CASE("group actions") {
  auto k = build_zp_circle(3, 2).witness.complex_ptr();
  CHECK_THROWS_AS(GroupAction(k, 4, rotation(6, 2)), DomainError);   // not prime
  CHECK_THROWS_AS(GroupAction(k, 3, rotation(6, 1)), DomainError);   // order 6
  CHECK_THROWS_AS(GroupAction(k, 2, rotation(6, 0)), DomainError);   // identity
  std::map<Vertex, Vertex> bad{{0, 1}, {1, 0}, {2, 2}, {3, 3}, {4, 4}, {5, 5}};
  CHECK_THROWS_AS(GroupAction(k, 2, bad), DomainError);              // not simplicial
  // reflection of the hexagon through two opposite vertices fixes them
  std::map<Vertex, Vertex> refl;
  for (Vertex i = 0; i < 6; ++i) refl[i] = (6 - i) % 6;
  GroupAction r(k, 2, refl);
  auto fr = r.check_free();
  CHECK_FALSE(fr.free);
  CHECK(r.apply(fr.witness) == fr.witness);
  GroupAction g(k, 3, rotation(6, 2));
  CHECK(g.apply(Simplex{0, 1}) == Simplex{2, 3});
  CHECK(g.apply(Vertex{4}, 3) == 4);
  CHECK(g.apply(Vertex{4}, 0) == 4);
}

TEST_CASE("join actions") {
  // S^0 with the swap
  auto s0k = share(SimplicialComplex::from_maximal(std::vector<Simplex>{{0}, {1}}));
  GroupAction swap(s0k, 2, {{0, 1}, {1, 0}});
  auto j = join(*s0k, *s0k);
  auto jk = share(j.complex);
  auto ja = join_action(swap, swap, j, jk);
  CHECK(jk->count(0) == 4);
  CHECK(ja.is_free());
  CHECK(ja.order() == 2);

  auto c = build_zp_circle(3, 1);
  auto s3 = join_zp_spheres(c, c);
  CHECK(s3.witness.dim() == 3);
  CHECK(s3.action.is_free());
  CHECK(s3.action.order() == 3);
  CHECK(odd_dimension_check(s3.witness, s3.action));

  auto c5 = build_zp_circle(5, 1);
  CHECK_THROWS_AS(join_zp_spheres(c, c5), DomainError);
}

TEST_CASE("actions on the subdivision") {
  auto z = build_zp_circle(3, 2);
  auto bd = barycentric_subdivision(z.witness.complex_ptr());
  auto a = induced_action_on_bd(z.action, bd);
  CHECK(a.is_free());
  CHECK(a.order() == 3);
  // walking round C_12 from 0, the action moves four steps
  auto order = cycle_order(*bd.complex, 0, bd.barycenter(Simplex{0, 1}));
  std::vector<std::size_t> pos(24);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (std::size_t i = 0; i < order.size(); ++i) CHECK(pos[a.apply(order[i])] == (i + 4) % 12);

  for (const auto& zp : {build_zp_circle(2, 2), build_zp_circle(5, 1), join_zp_spheres(build_zp_circle(3, 1), build_zp_circle(3, 1))}) {
    auto t = subdivide_zp_sphere(zp, 1);
    for (const auto& act : t.actions) CHECK(act.is_free());
  }
}

TEST_CASE("equivariance") {
  auto wr = equivariant_wrap();
  CHECK(verify_equivariance(wr.f, wr.tower.top_action(), wr.base.action).ok);
  // the top action is rotation by 8 positions
  auto walk = cycle_order(*wr.tower.tower.top(), 0, wr.tower.tower.top()->simplices(1).front()[1]);
  CHECK(walk.size() == 24);

  auto z = build_zp_circle(3, 2);
  auto k = z.witness.complex_ptr();
  SimplicialMap id(k, k, rotation(6, 0));
  CHECK(verify_equivariance(id, z.action, z.action).ok);

  // C_12 -> C_6 by position mod 6: rotation by 4 on C_12 becomes rotation by 4 mod 6, not 2
  auto t1 = subdivide_zp_sphere(z, 1);
  std::map<Vertex, Vertex> mod6;
  auto order = cycle_order(*t1.tower.top(), 0, t1.tower.levels[0].barycenter(Simplex{0, 1}));
  for (std::size_t i = 0; i < order.size(); ++i) mod6[order[i]] = static_cast<Vertex>(i % 6);
  SimplicialMap m(t1.tower.top(), k, mod6);
  auto e = verify_equivariance(m, t1.top_action(), z.action);
  CHECK_FALSE(e.ok);
  CHECK(t1.tower.top()->contains(Simplex{e.witness}));

  // collapsing half the circle onto one vertex
  std::map<Vertex, Vertex> clamp;
  for (std::size_t i = 0; i < order.size(); ++i) clamp[order[i]] = static_cast<Vertex>(std::min<std::size_t>(i, 5));
  SimplicialMap cl(t1.tower.top(), k, clamp);
  CHECK_FALSE(verify_equivariance(cl, t1.top_action(), z.action).ok);
}

TEST_CASE("degree modulo p") {
  auto z = build_zp_circle(3, 2);
  auto t0 = SubdivisionTower::build(z.witness.complex_ptr(), 0);
  SimplicialMap id(z.witness.complex_ptr(), z.witness.complex_ptr(), rotation(6, 0));
  auto r = verify_degree_mod_p(id, t0, z.witness, z.action, z.action);
  CHECK(r.degree == 1);
  CHECK(r.p == 3);
  CHECK(r.residue == 1);
  CHECK(r.pass());

  auto wr = equivariant_wrap();
  auto r2 = verify_degree_mod_p(wr.f, wr.tower.tower, wr.tower.top_witness(), wr.tower.top_action(), wr.base.action);
  CHECK(r2.degree == 4);
  CHECK(r2.residue == 1);
  CHECK(r2.pass());

  // Z_2 on both: rotation by 12 on C_24 and 3 on C_6; the wrap is not equivariant
  auto top = wr.tower.tower.top();
  GroupAction a24(top, 2, [&] {
    std::map<Vertex, Vertex> m;
    auto walk = cycle_order(*top, 0, top->simplices(1).front()[1]);
    for (std::size_t i = 0; i < 24; ++i) m[walk[i]] = walk[(i + 12) % 24];
    return m;
  }());
  GroupAction a6(z.witness.complex_ptr(), 2, rotation(6, 3));
  CHECK_THROWS_WITH_AS(verify_degree_mod_p(wr.f, wr.tower.tower, wr.tower.top_witness(), a24, a6),
                       doctest::Contains("hypothesis failed"), DomainError);

  for (unsigned p : {2u, 3u, 5u}) {
    auto c = build_zp_circle(p, p == 2 ? 2 : 1);
    auto t = SubdivisionTower::build(c.witness.complex_ptr(), 0);
    auto n = static_cast<unsigned>(c.witness.complex().count(0));
    SimplicialMap i(c.witness.complex_ptr(), c.witness.complex_ptr(), rotation(n, 0));
    auto rp = verify_degree_mod_p(i, t, c.witness, c.action, c.action);
    CHECK(rp.degree == 1);
    CHECK(rp.pass());
  }
}

TEST_CASE("cone lemma") {
  auto w = build_zp_circle(3, 2).witness;
  const auto& k = w.complex();
  Vertex apex = 100;
  auto cn = share(cone(apex, k));
  std::map<Vertex, Vertex> constant;
  for (auto v : cn->vertices()) constant[v] = 0;
  CHECK(cone_lemma_check(SimplicialMap(cn, w.complex_ptr(), constant), w).zero);

  // a cone can only map into C_6 by squeezing into a star; try many
  Rng rng(6);
  for (int t = 0; t < 50; ++t) {
    std::uniform_int_distribution<Vertex> pick(0, 5);
    Vertex c = pick(rng);
    std::map<Vertex, Vertex> m;
    m[apex] = c;
    std::bernoulli_distribution coin(0.5);
    for (auto v : k.vertices()) m[v] = coin(rng) ? c : (coin(rng) ? (c + 1) % 6 : (c + 5) % 6);
    // only keep maps that are simplicial: edges must not straddle c-1 and c+1
    try {
      SimplicialMap f(cn, w.complex_ptr(), m);
      auto r = cone_lemma_check(f, w);
      CHECK(r.zero);
      CHECK(r.image.is_zero());
    } catch (const DomainError&) {
    }
  }
}

TEST_CASE("odd dimension") {
  auto a = build_zp_circle(3, 2);
  CHECK(odd_dimension_check(a.witness, a.action));
  auto b = build_zp_circle(2, 2);
  CHECK(odd_dimension_check(b.witness, b.action));
  // Z_2 swap on S^0: dimension 0, allowed for p = 2
  auto s0 = oracle::s0();
  GroupAction swap(s0.complex_ptr(), 2, {{0, 1}, {1, 0}});
  CHECK(odd_dimension_check(s0, swap));
}

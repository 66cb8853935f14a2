#include <doctest.h>

#include <numeric>

#include "dmt/hopf.hpp"
#include "dmt/random.hpp"
#include "oracles.hpp"

using namespace dmt;

namespace {

ComplexPtr closure(std::vector<Simplex> gens) { return share(SimplicialComplex::from_maximal(gens)); }

SphereWitness c6() { return build_zp_circle(3, 2).witness; }

std::map<Vertex, Vertex> rotation(unsigned n, unsigned by) {
  std::map<Vertex, Vertex> m;
  for (Vertex i = 0; i < n; ++i) m[i] = (i + by) % n;
  return m;
}

// trace of phi_q read in the coordinates of an arbitrary unimodular basis
Integer trace_in(const ChainMap& phi, const BasisQ& b) {
  Integer t = 0;
  for (std::size_t i = 0; i < b.size(); ++i) t += b.coordinates(phi.apply(b.elements()[i].chain))[i];
  return t;
}

Integer trace_std(const ChainMap& phi, int q) {
  Integer t = 0;
  for (std::size_t i = 0; i < phi.source().count(q); ++i) t += phi.column(q, i).coefficient(i);
  return t;
}

}  // namespace

TEST_CASE("induced chain maps") {
  auto tri = closure({Simplex{0, 1, 2}});
  auto id = induced_chain_map(SimplicialMap(tri, tri, {{0, 0}, {1, 1}, {2, 2}}));
  for (int q = 0; q <= 2; ++q)
    for (std::size_t i = 0; i < tri->count(q); ++i) CHECK(id.column(q, i) == Chain::unit(q, i));

  auto edge = closure({Simplex{0, 1}});
  auto pt = closure({Simplex{2}});
  auto squash = induced_chain_map(SimplicialMap(edge, pt, {{0, 2}, {1, 2}}));
  CHECK(squash.column(1, 0).is_zero());
  CHECK(squash.column(0, 0) == Chain::unit(0, 0));

  auto tgt = closure({Simplex{3, 5}});
  auto swap = induced_chain_map(SimplicialMap(edge, tgt, {{0, 5}, {1, 3}}));
  CHECK(swap.column(1, 0) == chain_of(*tgt, Simplex{3, 5}, -1));

  // not simplicial: an edge onto a non-edge
  auto two = closure({Simplex{0}, Simplex{1}});
  CHECK_THROWS_AS(SimplicialMap(edge, two, {{0, 0}, {1, 1}}), DomainError);
  // missing vertex
  CHECK_THROWS_AS(SimplicialMap(edge, tgt, {{0, 5}}), DomainError);
}

TEST_CASE("chain map property") {
  Rng rng(1);
  for (int t = 0; t < 30; ++t) {
    auto k = share(random_complex(rng));
    auto f = random_simplicial_self_map(k, rng);
    CHECK(verify_chain_map(induced_chain_map(f)).ok);
  }
  // random integer columns are not chain maps
  auto c3 = share(skeleton_of_simplex(2, 1));
  std::uniform_int_distribution<int> d(-3, 3);
  int failures = 0;
  for (int t = 0; t < 20; ++t) {
    std::vector<std::vector<Chain>> cols(2);
    for (int q = 0; q <= 1; ++q)
      for (std::size_t i = 0; i < 3; ++i) {
        std::vector<Integer> v(3);
        for (auto& x : v) x = d(rng);
        cols[q].push_back(Chain::from_dense(q, v));
      }
    auto r = verify_chain_map(ChainMap(c3, c3, cols));
    if (!r.ok) {
      ++failures;
      CHECK(r.witness.dim() == r.dim);
      CHECK(c3->contains(r.witness));
    }
  }
  CHECK(failures >= 18);
}

TEST_CASE("subdivision chain map") {
  auto edge = closure({Simplex{0, 1}});
  auto bd = barycentric_subdivision(edge);
  auto g = subdivision_chain_map(bd);
  auto img = g.column(1, 0);
  CHECK(img.support_size() == 2);
  for (const auto& t : img.terms()) CHECK(std::abs(t.coeff) == 1);
  Vertex m = bd.barycenter(Simplex{0, 1});
  auto want = chain_of(*bd.complex, Simplex{0, m}) - chain_of(*bd.complex, Simplex{1, m});
  CHECK(img == want);
  CHECK(verify_chain_map(g).ok);

  auto w = c6();
  auto bh = barycentric_subdivision(w.complex_ptr());
  auto gh = subdivision_chain_map(bh);
  CHECK(verify_chain_map(gh).ok);
  auto fund = w.field().critical_chain(1, w.top_cell());
  auto image = gh.apply(fund);
  CHECK(image.support_size() == 12);
  for (const auto& t : image.terms()) CHECK(std::abs(t.coeff) == 1);
  CHECK(boundary(*bh.complex, image).is_zero());

  for (int d = 1; d <= 3; ++d) {
    std::vector<Vertex> vs(d + 1);
    std::iota(vs.begin(), vs.end(), 0);
    auto full = closure({Simplex(vs)});
    auto gd = subdivision_chain_map(barycentric_subdivision(full));
    Integer fact = 1;
    for (int i = 2; i <= d + 1; ++i) fact *= i;
    CHECK(gd.column(d, 0).support_size() == static_cast<std::size_t>(fact));
    CHECK(verify_chain_map(gd).ok);
  }

  auto tower = SubdivisionTower::build(w.complex_ptr(), 2);
  auto g2 = subdivision_chain_map(tower);
  CHECK(verify_chain_map(g2).ok);
  CHECK(g2.apply(fund).support_size() == 24);
  CHECK(g2.column(1, 0) == subdivision_chain_map(tower, Execution::serial).column(1, 0));
}

TEST_CASE("composition") {
  auto w = c6();
  auto k = w.complex_ptr();
  auto rot = induced_chain_map(SimplicialMap(k, k, rotation(6, 1)));
  auto id = ChainMap::identity(k);
  auto c = compose(id, rot);
  for (int q = 0; q <= 1; ++q)
    for (std::size_t i = 0; i < 6; ++i) CHECK(c.column(q, i) == rot.column(q, i));

  auto tower = SubdivisionTower::build(k, 2);
  auto f = oracle::wrap_map(tower, false);
  auto phi = compose(subdivision_chain_map(tower), induced_chain_map(f));
  CHECK(phi.is_endomorphism());
  CHECK(phi.source().count(1) == 24);
  CHECK(verify_chain_map(phi).ok);
  CHECK_THROWS_AS(compose(rot, phi), DomainError);

  // serial and parallel agree
  auto a = compose(phi, phi, Execution::serial);
  auto b = compose(phi, phi, Execution::parallel);
  for (int q = 0; q <= 1; ++q)
    for (std::size_t i = 0; i < 24; ++i) CHECK(a.column(q, i) == b.column(q, i));
}

TEST_CASE("alternating trace") {
  auto k = c6().complex_ptr();
  CHECK(alternating_trace(ChainMap::identity(k)) == 0);
  auto oct = oracle::octahedron().complex_ptr();
  CHECK(alternating_trace(ChainMap::identity(oct)) == 2);
  CHECK(alternating_trace(ChainMap::zero(oct, oct)) == 0);
  auto edge = closure({Simplex{0, 1}});
  CHECK_THROWS_AS(alternating_trace(ChainMap::zero(edge, k)), DomainError);

  // independent oracle on simplicial self-maps
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    auto r = share(random_complex(rng));
    auto f = random_simplicial_self_map(r, rng);
    CHECK(alternating_trace(induced_chain_map(f)) == oracle::lefschetz(f));
  }
}

TEST_CASE("Hopf right-hand side") {
  auto w = c6();
  auto k = w.complex_ptr();
  auto id = ChainMap::identity(k);
  auto rep = verify_hopf(id, w.field());
  CHECK(rep.lhs == 0);
  CHECK(rep.rhs == 0);
  auto rot = induced_chain_map(SimplicialMap(k, k, rotation(6, 1)));
  auto rr = verify_hopf(rot, w.field());
  CHECK(rr.lhs == 0);
  CHECK(rr.equal());
  CHECK(hopf_rhs(ChainMap::zero(k, k), w.field()) == 0);

  for (const auto& s : oracle::spheres()) {
    Integer want = (s.witness.dim() % 2 == 0 ? 1 : -1) + 1;
    auto r = verify_hopf(ChainMap::identity(s.witness.complex_ptr()), s.witness.field());
    CHECK_MESSAGE(r.lhs == want, s.name);
    CHECK_MESSAGE(r.rhs == want, s.name);
  }

  // empty field: both sides are the same sum
  Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    auto r = share(random_complex(rng));
    auto e = random_endomorphism(r, rng);
    GradientField plain{DiscreteVectorField(r)};
    CHECK(hopf_rhs(e.map, plain) == alternating_trace(e.map));
  }
  auto other = oracle::octahedron();
  CHECK_THROWS_AS(hopf_rhs(id, other.field()), DomainError);
}

TEST_CASE("Hopf trace formula on random instances") {
  Rng rng(2024);
  std::map<std::string, int> kinds;
  for (int t = 0; t < 200; ++t) {
    auto k = share(random_complex(rng));
    GradientField v(random_gradient_field(k, rng));
    auto e = random_endomorphism(k, rng);
    kinds[e.kind]++;
    REQUIRE(verify_chain_map(e.map).ok);
    auto serial = verify_hopf(e.map, v, Execution::serial);
    CHECK_MESSAGE(serial.equal(), e.kind);
    CHECK(hopf_rhs(e.map, v, Execution::parallel) == serial.rhs);
  }
  CHECK(kinds.size() >= 4);
}

TEST_CASE("trace does not depend on the basis") {
  Rng rng(99);
  for (int t = 0; t < 30; ++t) {
    auto k = share(random_complex(rng));
    GradientField v(random_gradient_field(k, rng));
    auto e = random_endomorphism(k, rng);
    for (int q = 0; q <= k->dim(); ++q) CHECK(trace_in(e.map, v.modified_basis(q)) == trace_std(e.map, q));
  }
}

TEST_CASE("paired-down simplices contribute through their boundary") {
  Rng rng(55);
  for (int t = 0; t < 30; ++t) {
    auto k = share(random_complex(rng));
    GradientField v(random_gradient_field(k, rng));
    auto e = random_endomorphism(k, rng);
    for (int q = 1; q <= k->dim(); ++q) {
      auto bq = v.modified_basis(q);
      auto bl = v.modified_basis(q - 1);
      for (auto b : v.partition().down[q]) {
        auto beta = Chain::unit(q, b);
        auto db = boundary(*k, beta);
        CHECK(inner_product(e.map.apply(beta), beta, bq) == inner_product(e.map.apply(db), db, bl));
      }
    }
  }
}

TEST_CASE("subdivide then take last vertices: degree one") {
  for (const auto& s : oracle::spheres()) {
    if (s.witness.complex().size() > 40) continue;
    auto bd = barycentric_subdivision(s.witness.complex_ptr());
    auto last = induced_chain_map(last_vertex_map(bd));
    auto phi = compose(last, subdivision_chain_map(bd));
    CHECK_MESSAGE(std::abs(degree_of_chain_map(phi, s.witness)) == 1, s.name);
  }
}

TEST_CASE("free actions: p divides the trace of equivariant composites") {
  for (auto [p, m] : std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {3, 2}, {5, 1}, {2, 3}}) {
    auto z = build_zp_circle(p, m);
    auto k = z.witness.complex_ptr();
    auto h = induced_chain_map(SimplicialMap(k, k, z.action.generator()));
    // equivariant endomorphisms: integer combinations of powers of h
    ChainMap acc = ChainMap::identity(k);
    ChainMap power = ChainMap::identity(k);
    for (unsigned j = 1; j < p; ++j) {
      power = compose(h, power);
      acc = acc + power.scaled(static_cast<Integer>(j) + 1);
    }
    CHECK(alternating_trace(compose(h, acc)) % p == 0);
    CHECK(alternating_trace(h) % p == 0);
  }
  // through a subdivision: h o g^2 o f on C_24
  auto z = build_zp_circle(3, 2);
  auto t = subdivide_zp_sphere(z, 2);
  for (bool flip : {false, true}) {
    auto f = oracle::wrap_map(t.tower, flip);
    if (!verify_equivariance(f, t.top_action(), z.action).ok) continue;
    auto top = t.tower.top();
    auto h = induced_chain_map(SimplicialMap(top, top, t.top_action().generator()));
    auto phi = compose(subdivision_chain_map(t.tower), induced_chain_map(f));
    CHECK(alternating_trace(compose(h, phi)) % 3 == 0);
  }
}

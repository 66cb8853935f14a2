#include <benchmark/benchmark.h>

#include "dmt/builders.hpp"
#include "dmt/chain_map.hpp"
#include "dmt/hopf.hpp"
#include "dmt/random.hpp"

#include <map>
#include <memory>

using namespace dmt;

namespace {

// Bd^k of the boundary of the 4-simplex with its witness
struct Fixture {
  SubdivisionTower tower;
  SphereWitness witness;
  ChainMap endo;
  GradientField busy;  // random maximal field, many critical cells
};

const Fixture& fixture(int k) {
  static std::map<int, std::unique_ptr<Fixture>> cache;
  auto& slot = cache[k];
  if (!slot) {
    auto base = sphere_skeleton_witness(4);
    auto tower = SubdivisionTower::build(base.complex_ptr(), k);
    SphereWitness w = base;
    for (int i = 0; i < k; ++i) w = sphere_witness_bd(w).witness;
    // last-vertex maps back down, then subdivide again: an endomorphism of Bd^k
    auto g = subdivision_chain_map(tower, Execution::serial);
    ChainMap down = ChainMap::identity(tower.top());
    for (auto it = tower.levels.rbegin(); it != tower.levels.rend(); ++it)
      down = compose(induced_chain_map(last_vertex_map(*it)), down, Execution::serial);
    auto endo = compose(g, down, Execution::serial);
    Rng rng(42);
    GradientField busy(random_gradient_field(tower.top(), rng));
    slot = std::make_unique<Fixture>(Fixture{tower, w, endo, busy});
  }
  return *slot;
}

Execution mode(const benchmark::State& s) { return s.range(1) ? Execution::parallel : Execution::serial; }

void BM_hopf_rhs(benchmark::State& s) {
  const auto& f = fixture(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(hopf_rhs(f.endo, f.busy, mode(s)));
  s.SetLabel(std::to_string(f.busy.complex().size()) + " simplices, " +
             std::to_string(f.busy.partition().total_critical()) + " critical");
}

void BM_subdivision_chain_map(benchmark::State& s) {
  const auto& f = fixture(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(subdivision_chain_map(f.tower, mode(s)));
}

void BM_critical_chains(benchmark::State& s) {
  const auto& f = fixture(static_cast<int>(s.range(0)));
  const auto& gf = f.busy;
  for (auto _ : s)
    for (int q = 0; q <= gf.complex().dim(); ++q) benchmark::DoNotOptimize(gf.co_critical_chains(q, mode(s)));
}

void BM_compose(benchmark::State& s) {
  const auto& f = fixture(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(compose(f.endo, f.endo, mode(s)));
}

void BM_verify_chain_map(benchmark::State& s) {
  const auto& f = fixture(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(verify_chain_map(f.endo, mode(s)));
}

}  // namespace

#define DMT_ARGS ArgsProduct({{1, 2}, {0, 1}})->ArgNames({"k", "par"})->UseRealTime()->Unit(benchmark::kMillisecond)
BENCHMARK(BM_hopf_rhs)->DMT_ARGS;
BENCHMARK(BM_subdivision_chain_map)->DMT_ARGS;
BENCHMARK(BM_critical_chains)->DMT_ARGS;
BENCHMARK(BM_compose)->DMT_ARGS;
BENCHMARK(BM_verify_chain_map)->DMT_ARGS;

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "ainf/cohomology.hpp"
#include "ainf/directed.hpp"
#include "ainf/fixtures.hpp"
#include "ainf/massey.hpp"
#include "ainf/twisted.hpp"

using namespace ainf;

namespace {

const FieldSpec Q = FieldSpec::rationals();

// Singletons A..D, A shifted up, D shifted down, the cones of f0 and g0.
std::shared_ptr<TwCategory> quiver_tw(int max_arity) {
  auto q = quiver_massey_fixture(Q, max_arity);
  auto T0 = free_category(q, {{{0, 0}}, {{0, 1}}, {{0, 2}}, {{0, 3}}, {{1, 0}}, {{-1, 3}}});
  auto cf = cone(*T0, Morphism{0, 1, 0, Vec::basis(Q, 0)});
  auto cg = cone(*T0, Morphism{1, 2, 0, Vec::basis(Q, 0)});
  return T0->with_objects({cf.cone, cg.cone});
}

void BM_RelationsBase(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto c = poly_fixture(7, 5, Q, n);
  for (auto _ : state) benchmark::DoNotOptimize(verify_relations(*c, n));
}
BENCHMARK(BM_RelationsBase)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_RelationsTwisted(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto T = quiver_tw(n);
  for (auto _ : state) benchmark::DoNotOptimize(verify_relations(*T, n));
}
BENCHMARK(BM_RelationsTwisted)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Cohomology(benchmark::State& state) {
  auto T = quiver_tw(4);
  for (auto _ : state) {
    CohomologyCache H(*T);
    for (std::size_t x = 0; x < T->object_count(); ++x) {
      for (std::size_t y = 0; y < T->object_count(); ++y) benchmark::DoNotOptimize(H(x, y).dims());
    }
  }
}
BENCHMARK(BM_Cohomology)->Unit(benchmark::kMillisecond);

void BM_Cone(benchmark::State& state) {
  auto T = quiver_tw(4);
  for (auto _ : state) {
    auto cd = cone(*T, T->morphism(6, 2, 0, {{{0, 1}, Vec::basis(Q, 0)}}));
    benchmark::DoNotOptimize(verify_maurer_cartan(T->base(), cd.cone));
  }
}
BENCHMARK(BM_Cone);

void BM_MasseyAinfty(benchmark::State& state) {
  auto T = quiver_tw(4);
  const Morphism f{0, 1, 0, Vec::basis(Q, 0)};
  const Morphism g{1, 2, 0, Vec::basis(Q, 0)};
  const Morphism h{2, 5, 1, Vec::basis(Q, 0)};
  CohomologyCache H(*T);
  for (auto _ : state) benchmark::DoNotOptimize(massey_ainfty(H, f, g, h));
}
BENCHMARK(BM_MasseyAinfty);

void BM_MasseyTriangulated(benchmark::State& state) {
  auto T = quiver_tw(4);
  const Morphism f{0, 1, 0, Vec::basis(Q, 0)};
  const Morphism g{1, 2, 0, Vec::basis(Q, 0)};
  const Morphism h{2, 5, 1, Vec::basis(Q, 0)};
  for (auto _ : state) benchmark::DoNotOptimize(massey_triangulated(*T, f, g, h));
}
BENCHMARK(BM_MasseyTriangulated)->Unit(benchmark::kMillisecond);

void BM_Directed(benchmark::State& state) {
  RandomBounds b;
  auto c = random_minimal_category(static_cast<std::uint64_t>(state.range(0)), b);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_directed(*c));
}
BENCHMARK(BM_Directed)->Arg(1)->Arg(2)->Arg(3);

}  // namespace
BENCHMARK_MAIN();

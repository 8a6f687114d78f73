#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "ribbon/hyperbolic.hpp"
#include "ribbon/invariants.hpp"
#include "ribbon/moves.hpp"
#include "ribbon/rotation.hpp"
#include "ribbon/schema.hpp"
#include "ribbon/schema_json.hpp"

namespace {

using namespace ribbon;

void BM_BoundaryCount(benchmark::State& state) {
  MetricGraph g = testing::complete(static_cast<int>(state.range(0)));
  RotationSystem r = default_rotation(g, 7);
  for (auto _ : state) benchmark::DoNotOptimize(boundary_count(g, r));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.dart_count()));
}
BENCHMARK(BM_BoundaryCount)->Arg(5)->Arg(8)->Arg(12);

void BM_BoundaryCensusK5(benchmark::State& state) {
  MetricGraph g = testing::k5();
  EnumerationOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(boundary_census(g, opts).max_boundaries);
}
BENCHMARK(BM_BoundaryCensusK5)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BettiDeficiency(benchmark::State& state) {
  MetricGraph g = testing::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(betti_deficiency(g));
}
BENCHMARK(BM_BettiDeficiency)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_GreedyMinimize(benchmark::State& state) {
  MetricGraph g = testing::complete(static_cast<int>(state.range(0)));
  RotationSystem r = default_rotation(g, 3);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_minimize(g, r).boundaries);
}
BENCHMARK(BM_GreedyMinimize)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMicrosecond);

void BM_WaistInverse(benchmark::State& state) {
  double L = min_waist_distance() + 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(waist_from_distance(L));
    L = L > 20.0 ? min_waist_distance() + 0.5 : L + 1e-3;
  }
}
BENCHMARK(BM_WaistInverse);

void BM_SchemaRoundTrip(benchmark::State& state) {
  MetricGraph g = testing::k5();
  SurfaceSchema s = naive_embedding(g);
  for (auto _ : state) {
    auto text = schema_to_json(s);
    benchmark::DoNotOptimize(verify_schema(schema_from_json(text)).size());
  }
}
BENCHMARK(BM_SchemaRoundTrip)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "spinform/catalog.hpp"
#include "spinform/hypersurface4.hpp"
#include "spinform/killing_flow.hpp"
#include "spinform/spin_calculus.hpp"

namespace {

using namespace spinform;

void BM_FrameAt(benchmark::State& state) {
  const Chart c = catalog("clifford_torus");
  double u = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(frame_at(c, u, 0.1));
    u = u > 0.5 ? -0.5 : u + 1e-3;
  }
}
BENCHMARK(BM_FrameAt);

void BM_Frame3At(benchmark::State& state) {
  const Chart3 c = catalog3("quadric_graph");
  for (auto _ : state) benchmark::DoNotOptimize(frame3_at(c, 0.01, -0.02, 0.03));
}
BENCHMARK(BM_Frame3At);

void BM_Propagator(benchmark::State& state) {
  const Chart c = catalog("sphere");
  const ModifiedConnection conn(c, 0.0, half_shape_source());
  const auto seg = ParamCurve::segment({-0.5, 1.2}, {0.5, 1.9});
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(propagator(conn, seg, steps));
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_Propagator)->Arg(4)->Arg(64);

void BM_SolveOnChart(benchmark::State& state) {
  const Chart c = catalog("geodesic_sphere_h3");
  const int n = static_cast<int>(state.range(0));
  const auto geo = SurfaceGrid::make(c, n, n);
  const ModifiedConnection conn(c, c.space.eta(), half_shape_source());
  for (auto _ : state) benchmark::DoNotOptimize(solve_on_chart(conn, geo));
}
BENCHMARK(BM_SolveOnChart)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_EnergyMomentum(benchmark::State& state) {
  const Chart c = catalog("catenoid");
  const auto geo = SurfaceGrid::make(c, 64, 64);
  const ModifiedConnection conn(c, 0.0, half_shape_source());
  const SpinorField phi = solve_on_chart(conn, geo).field;
  for (auto _ : state) benchmark::DoNotOptimize(energy_momentum(phi, 0.0));
}
BENCHMARK(BM_EnergyMomentum)->Unit(benchmark::kMillisecond);

void BM_Solve3(benchmark::State& state) {
  const Chart3 c = catalog3("round_s3");
  const int n = static_cast<int>(state.range(0));
  const auto geo = HypersurfaceGrid::make(c, n, n, n);
  const HypersurfaceConnection conn(c, half_shape_source3());
  for (auto _ : state) benchmark::DoNotOptimize(solve3(conn, geo));
}
BENCHMARK(BM_Solve3)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

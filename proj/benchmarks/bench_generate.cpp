#include <benchmark/benchmark.h>

#include "hrg/generate.hpp"

namespace {

void BM_GenerateFast(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const hrg::ModelParams params = hrg::calibrated_params(n, 0.75, 8.0, 1);
  for (auto _ : state) {
    const hrg::HrgGraph g = hrg::generate_fast(params);
    benchmark::DoNotOptimize(g.num_edges());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_GenerateFast)->RangeMultiplier(4)->Range(1 << 12, 1 << 18)->Unit(benchmark::kMillisecond);

// Quadratic; kept small.
void BM_GenerateNaive(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const hrg::ModelParams params = hrg::calibrated_params(n, 0.75, 8.0, 1);
  for (auto _ : state) {
    const hrg::HrgGraph g = hrg::generate_naive(params);
    benchmark::DoNotOptimize(g.num_edges());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_GenerateNaive)->RangeMultiplier(4)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond);

void BM_SamplePoints(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const hrg::ModelParams params = hrg::ModelParams::with_C(n, 0.75, 0.0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hrg::sample_points(params).data());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_SamplePoints)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_CalibrateC(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hrg::calibrate_C(100'000, 0.75, 8.0));
}
BENCHMARK(BM_CalibrateC)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

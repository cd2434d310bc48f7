#include <benchmark/benchmark.h>

#include "hrg/analysis.hpp"
#include "hrg/generate.hpp"
#include "hrg/geometry.hpp"

namespace {

const hrg::HrgGraph& graph_1e5() {
  static const hrg::HrgGraph g = hrg::generate_fast(hrg::calibrated_params(100'000, 0.75, 8.0, 3));
  return g;
}

void BM_FitPowerLaw(benchmark::State& state) {
  const auto degrees = graph_1e5().degrees();
  for (auto _ : state) benchmark::DoNotOptimize(hrg::fit_power_law(degrees, 10).beta);
}
BENCHMARK(BM_FitPowerLaw)->Unit(benchmark::kMillisecond);

void BM_MaxSectorDegreeSum(benchmark::State& state) {
  const auto& g = graph_1e5();
  const double width = hrg::sector_width(g.num_vertices(), g.params().alpha);
  for (auto _ : state) benchmark::DoNotOptimize(hrg::max_sector_degree_sum(g, width, 100, 1));
}
BENCHMARK(BM_MaxSectorDegreeSum)->Unit(benchmark::kMillisecond);

void BM_InnerDiskCheck(benchmark::State& state) {
  const auto& g = graph_1e5();
  const double rho = hrg::inner_disk_radius(g.num_vertices(), g.params().alpha);
  for (auto _ : state) benchmark::DoNotOptimize(hrg::inner_disk_check(g, rho).status);
}
BENCHMARK(BM_InnerDiskCheck)->Unit(benchmark::kMillisecond);

void BM_DiameterEstimate(benchmark::State& state) {
  const auto& g = graph_1e5();
  for (auto _ : state) benchmark::DoNotOptimize(hrg::diameter(g, hrg::DiameterMode::estimate, 1));
}
BENCHMARK(BM_DiameterEstimate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

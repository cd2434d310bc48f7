#include <benchmark/benchmark.h>

#include <map>
#include <vector>

#include "hrg/generate.hpp"
#include "hrg/geometry.hpp"
#include "hrg/graph.hpp"
#include "hrg/rng.hpp"
#include "hrg/search.hpp"

namespace {

struct Fixture {
  hrg::HrgGraph graph;
  std::vector<std::pair<hrg::Vertex, hrg::Vertex>> pairs;
};

// One graph per (n, α), shared by all strategy benchmarks.
const Fixture& fixture(std::uint64_t n, double alpha) {
  static std::map<std::pair<std::uint64_t, double>, Fixture> cache;
  auto [it, inserted] = cache.try_emplace({n, alpha});
  if (inserted) {
    it->second.graph = hrg::generate_fast(hrg::calibrated_params(n, alpha, 8.0, 7));
    const hrg::Component comp = hrg::largest_component(it->second.graph);
    hrg::Xoshiro256 rng(11);
    for (int i = 0; i < 256; ++i) {
      it->second.pairs.emplace_back(comp.vertices[rng.below(comp.size())],
                                    comp.vertices[rng.below(comp.size())]);
    }
  }
  return it->second;
}

template <class MakeStrategy>
void run_queries(benchmark::State& state, MakeStrategy make) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const double alpha = static_cast<double>(state.range(1)) / 100.0;
  const Fixture& f = fixture(n, alpha);
  const hrg::AlternationStrategy strategy = make(n, alpha);
  hrg::BidirectionalBfs engine(f.graph);
  std::size_t i = 0;
  std::uint64_t edges = 0;
  for (auto _ : state) {
    const auto [s, t] = f.pairs[i++ % f.pairs.size()];
    const hrg::SearchOutcome out = engine.run(s, t, strategy);
    edges += out.total_cost();
    benchmark::DoNotOptimize(out.distance);
  }
  state.counters["edges/query"] =
      benchmark::Counter(static_cast<double>(edges) / static_cast<double>(state.iterations()));
}

void BM_Greedy(benchmark::State& state) {
  run_queries(state, [](std::uint64_t, double) { return hrg::AlternationStrategy{hrg::Greedy{}}; });
}
void BM_RoundRobin(benchmark::State& state) {
  run_queries(state, [](std::uint64_t, double) { return hrg::AlternationStrategy{hrg::RoundRobin{}}; });
}
void BM_Oracle(benchmark::State& state) {
  run_queries(state, [](std::uint64_t n, double alpha) {
    return hrg::AlternationStrategy{hrg::GeometricOracle{hrg::inner_disk_radius(n, alpha)}};
  });
}

void BM_UnidirectionalBfs(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const Fixture& f = fixture(n, static_cast<double>(state.range(1)) / 100.0);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(hrg::bfs(f.graph, f.pairs[i++ % f.pairs.size()].first).dist.data());
}

void grid(benchmark::internal::Benchmark* b) {
  for (std::int64_t n : {25'000, 100'000}) {
    for (std::int64_t alpha : {60, 75, 90}) b->Args({n, alpha});
  }
  b->ArgNames({"n", "alpha_pct"})->Unit(benchmark::kMicrosecond);
}

BENCHMARK(BM_Greedy)->Apply(grid);
BENCHMARK(BM_RoundRobin)->Apply(grid);
BENCHMARK(BM_Oracle)->Apply(grid);
BENCHMARK(BM_UnidirectionalBfs)->Apply(grid);

}  // namespace

BENCHMARK_MAIN();

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "hrg/analysis.hpp"
#include "hrg/generate.hpp"
#include "hrg/rng.hpp"
#include "hrg/search.hpp"
#include "oracles.hpp"

namespace hrg {
namespace {

HrgGraph make_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  const ModelParams params = ModelParams::with_C(std::max<std::size_t>(n, 1), 0.75, 0.0, 0);
  return HrgGraph::from_edges(params, std::vector<PolarPoint>(n), edges);
}

HrgGraph path_graph(std::size_t k) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
  return make_graph(k, edges);
}

const std::vector<AlternationStrategy> kStrategies{Greedy{}, RoundRobin{}, GeometricOracle{3.0}};

void expect_valid_path(const HrgGraph& g, const SearchOutcome& out, Vertex s, Vertex t) {
  ASSERT_TRUE(out.distance.has_value());
  ASSERT_EQ(out.path.size(), *out.distance + 1u);
  EXPECT_EQ(out.path.front(), s);
  EXPECT_EQ(out.path.back(), t);
  for (std::size_t i = 0; i + 1 < out.path.size(); ++i)
    EXPECT_TRUE(g.has_edge(out.path[i], out.path[i + 1]));
}

// Per-side cost recomputed from plain BFS layers: Σ deg over the first `layers` layers.
std::uint64_t layered_cost(const HrgGraph& g, const BfsTree& tree, std::uint32_t layers) {
  std::uint64_t cost = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (tree.dist[v] < layers) cost += g.degree(v);
  return cost;
}

// Second route to the schedule optimum: the searches meet exactly when the explored
// layer counts i, j first satisfy i + j = d, so the optimum is a minimum of prefix sums.
std::uint64_t closed_form_optimum(const HrgGraph& g, Vertex s, Vertex t) {
  const BfsTree a = bfs(g, s), b = bfs(g, t);
  const std::uint32_t d = a.dist[t];
  std::uint64_t best = ~std::uint64_t{0};
  for (std::uint32_t i = 0; i <= d; ++i)
    best = std::min(best, layered_cost(g, a, i) + layered_cost(g, b, d - i));
  return best;
}

TEST(Bfs, EdgelessGraph) {
  const BfsTree t = bfs(make_graph(4, {}), 2);
  EXPECT_EQ(t.dist, (std::vector<std::uint32_t>{kUnreached, kUnreached, 0, kUnreached}));
}

TEST(Bfs, PathGraph) {
  const BfsTree t = bfs(path_graph(4), 0);
  EXPECT_EQ(t.dist, (std::vector<std::uint32_t>{0, 1, 2, 3}));
  EXPECT_EQ(t.parent[3], 2u);
  EXPECT_THROW(bfs(path_graph(4), 4), std::invalid_argument);
}

TEST(Bfs, MatchesRelaxationOracle) {
  const HrgGraph g = generate_fast(calibrated_params(2000, 0.75, 8.0, 3));
  for (Vertex s : {0u, 17u, 999u, 1999u}) EXPECT_EQ(bfs(g, s).dist, oracle::relaxation_distances(g, s));
}

TEST(Bidirectional, SameVertex) {
  const HrgGraph g = path_graph(3);
  for (const auto& strategy : kStrategies) {
    const SearchOutcome out = bidirectional_bfs(g, 1, 1, strategy);
    EXPECT_EQ(out.distance, 0u);
    EXPECT_EQ(out.path, std::vector<Vertex>{1});
    EXPECT_EQ(out.total_cost(), 0u);
  }
}

TEST(Bidirectional, PathGraphRoundRobinMeetsInTheMiddle) {
  const SearchOutcome out = bidirectional_bfs(path_graph(5), 0, 4, RoundRobin{});
  EXPECT_EQ(out.distance, 4u);
  EXPECT_EQ(out.meeting_vertex, 2u);
  EXPECT_EQ(out.path, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_EQ(out.schedule, (std::vector<Side>{Side::forward, Side::backward, Side::forward,
                                             Side::backward}));
}

TEST(Bidirectional, GreedyTieGoesForward) {
  const SearchOutcome out = bidirectional_bfs(path_graph(5), 0, 4, Greedy{});
  ASSERT_FALSE(out.schedule.empty());
  EXPECT_EQ(out.schedule.front(), Side::forward);
  EXPECT_EQ(out.distance, 4u);
}

TEST(Bidirectional, GreedyPicksCheaperSide) {
  // Vertex 0 has degree 3, vertex 4 has degree 1.
  const HrgGraph g = make_graph(7, {{0, 1}, {0, 5}, {0, 6}, {1, 2}, {2, 3}, {3, 4}});
  const SearchOutcome out = bidirectional_bfs(g, 0, 4, Greedy{});
  EXPECT_EQ(out.schedule.front(), Side::backward);
  expect_valid_path(g, out, 0, 4);
}

TEST(Bidirectional, DisconnectedIsUnreachable) {
  const HrgGraph g = make_graph(6, {{0, 1}, {1, 2}, {3, 4}});
  for (const auto& strategy : kStrategies) {
    const SearchOutcome out = bidirectional_bfs(g, 0, 4, strategy);
    EXPECT_FALSE(out.reachable());
    EXPECT_TRUE(out.path.empty());
    EXPECT_FALSE(bidirectional_bfs(g, 5, 0, strategy).reachable());
  }
}

TEST(Bidirectional, InvalidArguments) {
  const HrgGraph g = path_graph(3);
  EXPECT_THROW(bidirectional_bfs(g, 0, 3, Greedy{}), std::invalid_argument);
  EXPECT_THROW(bidirectional_bfs(g, 3, 0, Greedy{}), std::invalid_argument);
  EXPECT_THROW(bidirectional_bfs(g, 0, 2, GeometricOracle{-1.0}), std::invalid_argument);
  EXPECT_THROW(parse_strategy("dijkstra"), std::invalid_argument);
  EXPECT_EQ(strategy_name(parse_strategy("oracle", 2.0)), "oracle");
}

TEST(Bidirectional, AllStrategiesMatchBfsAndCostsRecompute) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const double alpha = seed % 2 ? 0.6 : 0.9;
    const HrgGraph g = generate_fast(calibrated_params(2000, alpha, 8.0, seed));
    const Component comp = largest_component(g);
    const double rho = inner_disk_radius(2000, alpha);
    BidirectionalBfs search(g);
    Xoshiro256 rng(seed);
    for (int i = 0; i < 40; ++i) {
      const Vertex s = comp.vertices[rng.below(comp.size())];
      const Vertex t = static_cast<Vertex>(rng.below(g.num_vertices()));
      const BfsTree from_s = bfs(g, s), from_t = bfs(g, t);
      for (AlternationStrategy strategy : {AlternationStrategy{Greedy{}}, AlternationStrategy{RoundRobin{}},
                                           AlternationStrategy{GeometricOracle{rho}}}) {
        const SearchOutcome out = search.run(s, t, strategy);
        if (from_s.dist[t] == kUnreached) {
          EXPECT_FALSE(out.reachable());
          continue;
        }
        ASSERT_EQ(out.distance, from_s.dist[t]) << strategy_name(strategy);
        expect_valid_path(g, out, s, t);
        EXPECT_EQ(out.cost_forward, layered_cost(g, from_s, out.layers_forward()));
        EXPECT_EQ(out.cost_backward, layered_cost(g, from_t, out.layers_backward()));
        EXPECT_EQ(out.cost_forward, std::accumulate(out.layer_costs_forward.begin(),
                                                    out.layer_costs_forward.end(), std::uint64_t{0}));
        EXPECT_EQ(out.schedule.size(), out.layers_forward() + out.layers_backward());
      }
    }
  }
}

TEST(SearchState, NextCostIsFrontierDegreeSum) {
  const HrgGraph g = generate_fast(calibrated_params(1000, 0.75, 8.0, 1));
  SearchState state(Side::forward, g.num_vertices());
  state.reset(g, 0);
  while (!state.exhausted()) {
    std::uint64_t sum = 0;
    for (Vertex v : state.frontier()) sum += g.degree(v);
    EXPECT_EQ(state.next_cost(), sum);
    EXPECT_EQ(state.explore(g), sum);
  }
  // Reuse after reset.
  state.reset(g, 5);
  EXPECT_TRUE(state.settled(5));
  EXPECT_FALSE(state.settled(0));
}

TEST(Enumerate, SameVertexCostsNothing) {
  EXPECT_EQ(enumerate_strategy_costs(path_graph(3), 1, 1, 5).min_cost, 0u);
}

TEST(Enumerate, StarGraph) {
  const HrgGraph g = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const ScheduleOptimum opt = enumerate_strategy_costs(g, 1, 2, 4);
  EXPECT_EQ(opt.min_cost, 2u);
  EXPECT_EQ(opt.best_schedule.size(), 2u);
  // Forward-forward, forward-backward, backward-forward, backward-backward all meet at step 2.
  EXPECT_EQ(opt.schedules, 4u);
}

TEST(Enumerate, Errors) {
  const HrgGraph g = make_graph(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(enumerate_strategy_costs(g, 0, 2, 5), std::invalid_argument);
  EXPECT_THROW(enumerate_strategy_costs(path_graph(30), 0, 29, 21), std::invalid_argument);
  EXPECT_THROW(enumerate_strategy_costs(path_graph(30), 0, 25, 20), std::invalid_argument);
}

TEST(Enumerate, MatchesClosedFormAndBoundsGreedy) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const HrgGraph g = generate_fast(calibrated_params(250, 0.6 + 0.03 * seed, 6.0, seed));
    const Component comp = largest_component(g);
    if (comp.size() < 2) continue;
    const std::uint32_t diam = component_diameter(g, comp.vertices[0]);
    Xoshiro256 rng(seed + 100);
    for (int i = 0; i < 20; ++i) {
      const Vertex s = comp.vertices[rng.below(comp.size())];
      const Vertex t = comp.vertices[rng.below(comp.size())];
      if (bfs(g, s).dist[t] > 12) continue;
      const ScheduleOptimum opt = enumerate_strategy_costs(g, s, t, 12);
      ASSERT_EQ(opt.min_cost, closed_form_optimum(g, s, t)) << s << ' ' << t;
      const SearchOutcome greedy = bidirectional_bfs(g, s, t, Greedy{});
      EXPECT_GE(greedy.total_cost(), opt.min_cost);
      EXPECT_LE(greedy.total_cost(), std::uint64_t{diam} * opt.min_cost);
      EXPECT_LE(greedy.total_cost(),
                std::uint64_t{greedy.layers_forward() + greedy.layers_backward()} * opt.min_cost);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100u);
}

// After both sides pass their inner-disk trigger, the searches meet within two more
// steps per side on the vast majority of pairs.
TEST(GeometricOracle, FewStepsAfterTrigger) {
  const std::uint64_t n = 100000;
  const double alpha = 0.75;
  const HrgGraph g = generate_fast(calibrated_params(n, alpha, 8.0, 13));
  const Component comp = largest_component(g);
  const double rho = inner_disk_radius(n, alpha);
  BidirectionalBfs search(g);
  Xoshiro256 rng(77);
  const int pairs = 300;
  int good = 0;
  for (int i = 0; i < pairs; ++i) {
    const Vertex s = comp.vertices[rng.below(comp.size())];
    const Vertex t = comp.vertices[rng.below(comp.size())];
    const SearchOutcome out = search.run(s, t, GeometricOracle{rho});
    ASSERT_TRUE(out.reachable());
    auto extra = [](std::uint32_t layers, std::optional<std::uint32_t> trigger) -> std::int64_t {
      if (!trigger) return 0;
      return static_cast<std::int64_t>(layers) - static_cast<std::int64_t>(*trigger + 1);
    };
    if (extra(out.layers_forward(), out.inner_layer_forward) <= 2 &&
        extra(out.layers_backward(), out.inner_layer_backward) <= 2)
      ++good;
  }
  EXPECT_GE(good, pairs * 95 / 100);
}

}  // namespace
}  // namespace hrg

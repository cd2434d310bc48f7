#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hrg/graph.hpp"

namespace hrg {

inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

enum class Side : std::uint8_t { forward, backward };

inline Side opposite(Side side) noexcept {
  return side == Side::forward ? Side::backward : Side::forward;
}

/// Continue with the side whose next exploration step is cheaper; forward on ties.
struct Greedy {};
/// Strictly alternate, forward first.
struct RoundRobin {};
/// Geometry-aware two-phase schedule: each side runs until it has explored one layer
/// past its first layer containing a vertex of radius <= rho; then the sides alternate.
struct GeometricOracle {
  double rho = 0.0;
};

using AlternationStrategy = std::variant<Greedy, RoundRobin, GeometricOracle>;

std::string strategy_name(const AlternationStrategy& strategy);

/// Parses "greedy", "roundrobin" or "oracle"; `rho` is used only by the oracle.
AlternationStrategy parse_strategy(std::string_view name, double rho = 0.0);

struct BfsTree {
  std::vector<std::uint32_t> dist;  // kUnreached when not reachable
  std::vector<Vertex> parent;       // kNoVertex at the root and when unreachable
};

/// Plain level-synchronous BFS. Throws std::invalid_argument for an invalid source.
BfsTree bfs(const HrgGraph& graph, Vertex source);

/// One side of a layered search. Per-vertex arrays are stamped with an epoch so a state
/// can be reset in O(1) and reused across queries on the same graph.
class SearchState {
 public:
  SearchState(Side side, std::size_t num_vertices);

  void reset(const HrgGraph& graph, Vertex root);

  /// Computes the next layer from the current frontier. Returns the step's cost,
  /// the degree sum of the layer that was explored.
  std::uint64_t explore(const HrgGraph& graph);

  Side side() const noexcept { return side_; }
  bool settled(Vertex v) const noexcept { return stamp_[v] == epoch_; }
  std::uint32_t dist(Vertex v) const noexcept { return settled(v) ? dist_[v] : kUnreached; }
  Vertex parent(Vertex v) const noexcept { return settled(v) ? parent_[v] : kNoVertex; }

  std::span<const Vertex> frontier() const noexcept { return frontier_; }
  bool exhausted() const noexcept { return frontier_.empty(); }
  std::uint32_t layer_index() const noexcept { return layer_index_; }
  /// Σ deg(v) over the frontier: what the next exploration step will cost.
  std::uint64_t next_cost() const noexcept { return next_cost_; }

 private:
  Side side_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> dist_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> frontier_;
  std::vector<Vertex> next_;
  std::uint32_t layer_index_ = 0;
  std::uint64_t next_cost_ = 0;
};

struct SearchOutcome {
  std::optional<std::uint32_t> distance;  // nullopt when s and t are disconnected
  std::vector<Vertex> path;               // s ... t, empty when unreachable
  std::optional<Vertex> meeting_vertex;

  std::uint64_t cost_forward = 0;
  std::uint64_t cost_backward = 0;
  std::vector<std::uint64_t> layer_costs_forward;  // one entry per exploration step
  std::vector<std::uint64_t> layer_costs_backward;
  std::vector<Side> schedule;

  /// GeometricOracle only: index of the first layer holding a vertex of radius <= rho.
  std::optional<std::uint32_t> inner_layer_forward;
  std::optional<std::uint32_t> inner_layer_backward;

  bool reachable() const noexcept { return distance.has_value(); }
  std::uint32_t layers_forward() const noexcept {
    return static_cast<std::uint32_t>(layer_costs_forward.size());
  }
  std::uint32_t layers_backward() const noexcept {
    return static_cast<std::uint32_t>(layer_costs_backward.size());
  }
  std::uint64_t total_cost() const noexcept { return cost_forward + cost_backward; }
  std::uint64_t max_side_cost() const noexcept { return std::max(cost_forward, cost_backward); }
};

/// Bidirectional BFS bound to one graph. Holds query-local scratch state, so one
/// instance serves many sequential queries; use one instance per thread.
class BidirectionalBfs {
 public:
  explicit BidirectionalBfs(const HrgGraph& graph);

  /// Throws std::invalid_argument for invalid vertices or a negative oracle radius.
  SearchOutcome run(Vertex s, Vertex t, const AlternationStrategy& strategy);

 private:
  const HrgGraph* graph_;
  SearchState forward_;
  SearchState backward_;
};

/// Convenience wrapper that allocates fresh scratch state.
SearchOutcome bidirectional_bfs(const HrgGraph& graph, Vertex s, Vertex t,
                                const AlternationStrategy& strategy);

struct ScheduleOptimum {
  std::uint64_t min_cost = 0;
  std::vector<Side> best_schedule;
  std::uint64_t schedules = 0;  // complete schedules enumerated
};

inline constexpr std::uint32_t kMaxEnumerationLayers = 20;

/// Exhaustively enumerates every alternation schedule (sequence of side choices, full
/// layers only) until the two searches meet, and returns the cheapest. Requires
/// d(s, t) <= max_layers <= 20; throws std::invalid_argument otherwise or when t is
/// unreachable from s.
ScheduleOptimum enumerate_strategy_costs(const HrgGraph& graph, Vertex s, Vertex t,
                                         std::uint32_t max_layers);

}  // namespace hrg

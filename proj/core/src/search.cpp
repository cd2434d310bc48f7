#include "hrg/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hrg {

namespace {

void check_vertex(const HrgGraph& graph, Vertex v, const char* what) {
  if (v >= graph.num_vertices()) {
    throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                " out of range (n = " + std::to_string(graph.num_vertices()) +
                                ")");
  }
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string strategy_name(const AlternationStrategy& strategy) {
  return std::visit(Overloaded{[](const Greedy&) { return std::string("greedy"); },
                               [](const RoundRobin&) { return std::string("roundrobin"); },
                               [](const GeometricOracle&) { return std::string("oracle"); }},
                    strategy);
}

AlternationStrategy parse_strategy(std::string_view name, double rho) {
  if (name == "greedy") return Greedy{};
  if (name == "roundrobin") return RoundRobin{};
  if (name == "oracle") return GeometricOracle{rho};
  throw std::invalid_argument("unknown strategy '" + std::string(name) +
                              "' (expected greedy, roundrobin or oracle)");
}

BfsTree bfs(const HrgGraph& graph, Vertex source) {
  check_vertex(graph, source, "bfs");
  const std::size_t n = graph.num_vertices();
  BfsTree tree{std::vector<std::uint32_t>(n, kUnreached), std::vector<Vertex>(n, kNoVertex)};
  std::vector<Vertex> queue;
  queue.reserve(n);
  queue.push_back(source);
  tree.dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : graph.neighbors(v)) {
      if (tree.dist[w] == kUnreached) {
        tree.dist[w] = tree.dist[v] + 1;
        tree.parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  return tree;
}

SearchState::SearchState(Side side, std::size_t num_vertices)
    : side_(side), stamp_(num_vertices, 0), dist_(num_vertices), parent_(num_vertices) {}

void SearchState::reset(const HrgGraph& graph, Vertex root) {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  frontier_.clear();
  next_.clear();
  layer_index_ = 0;
  stamp_[root] = epoch_;
  dist_[root] = 0;
  parent_[root] = kNoVertex;
  frontier_.push_back(root);
  next_cost_ = graph.degree(root);
}

std::uint64_t SearchState::explore(const HrgGraph& graph) {
  const std::uint64_t cost = next_cost_;
  const std::uint32_t next_dist = layer_index_ + 1;
  next_.clear();
  std::uint64_t next_cost = 0;
  for (Vertex v : frontier_) {
    for (Vertex w : graph.neighbors(v)) {
      if (stamp_[w] != epoch_) {
        stamp_[w] = epoch_;
        dist_[w] = next_dist;
        parent_[w] = v;
        next_.push_back(w);
        next_cost += graph.degree(w);
      }
    }
  }
  frontier_.swap(next_);
  layer_index_ = next_dist;
  next_cost_ = next_cost;
  return cost;
}

BidirectionalBfs::BidirectionalBfs(const HrgGraph& graph)
    : graph_(&graph),
      forward_(Side::forward, graph.num_vertices()),
      backward_(Side::backward, graph.num_vertices()) {}

SearchOutcome BidirectionalBfs::run(Vertex s, Vertex t, const AlternationStrategy& strategy) {
  const HrgGraph& graph = *graph_;
  check_vertex(graph, s, "bidirectional_bfs source");
  check_vertex(graph, t, "bidirectional_bfs target");

  const auto* oracle = std::get_if<GeometricOracle>(&strategy);
  if (oracle && !(oracle->rho >= 0.0))
    throw std::invalid_argument("bidirectional_bfs: oracle radius must be non-negative");

  SearchOutcome out;
  forward_.reset(graph, s);
  backward_.reset(graph, t);

  std::optional<std::uint32_t>* inner_layer[2] = {&out.inner_layer_forward,
                                                  &out.inner_layer_backward};
  auto state_of = [&](Side side) -> SearchState& {
    return side == Side::forward ? forward_ : backward_;
  };
  auto note_inner = [&](Side side) {
    auto& slot = *inner_layer[static_cast<int>(side)];
    if (!oracle || slot) return;
    const SearchState& state = state_of(side);
    for (Vertex v : state.frontier()) {
      if (graph.coord(v).radius <= oracle->rho) {
        slot = state.layer_index();
        return;
      }
    }
  };
  note_inner(Side::forward);
  note_inner(Side::backward);

  if (s == t) {
    out.distance = 0;
    out.path = {s};
    out.meeting_vertex = s;
    return out;
  }

  auto phase_one_done = [&](Side side) {
    const auto& slot = *inner_layer[static_cast<int>(side)];
    return slot && state_of(side).layer_index() >= *slot + 1;
  };

  Side round_robin_next = Side::forward;
  for (;;) {
    if (forward_.exhausted() && backward_.exhausted()) break;

    Side side = Side::forward;
    if (oracle && !phase_one_done(Side::forward) && !forward_.exhausted()) {
      side = Side::forward;
    } else if (oracle && !phase_one_done(Side::backward) && !backward_.exhausted()) {
      side = Side::backward;
    } else if (std::holds_alternative<Greedy>(strategy)) {
      side = forward_.next_cost() <= backward_.next_cost() ? Side::forward : Side::backward;
    } else {
      side = round_robin_next;
    }
    // An exhausted side has nothing left to explore; the other one continues alone.
    if (state_of(side).exhausted()) side = opposite(side);
    const bool phase_two = !oracle || ((phase_one_done(Side::forward) || forward_.exhausted()) &&
                                       (phase_one_done(Side::backward) || backward_.exhausted()));
    if (phase_two) {
      round_robin_next = opposite(side);
    }

    SearchState& active = state_of(side);
    const SearchState& other = state_of(opposite(side));
    const std::uint64_t cost = active.explore(graph);
    out.schedule.push_back(side);
    if (side == Side::forward) {
      out.cost_forward += cost;
      out.layer_costs_forward.push_back(cost);
    } else {
      out.cost_backward += cost;
      out.layer_costs_backward.push_back(cost);
    }
    note_inner(side);

    // Meeting: vertices of the new layer already settled by the other side.
    std::uint32_t best = kUnreached;
    Vertex meet = kNoVertex;
    for (Vertex v : active.frontier()) {
      if (!other.settled(v)) continue;
      const std::uint32_t total = active.dist(v) + other.dist(v);
      if (total < best || (total == best && v < meet)) {
        best = total;
        meet = v;
      }
    }
    if (meet == kNoVertex) continue;

    out.distance = best;
    out.meeting_vertex = meet;
    for (Vertex v = meet; v != kNoVertex; v = forward_.parent(v)) out.path.push_back(v);
    std::reverse(out.path.begin(), out.path.end());
    for (Vertex v = backward_.parent(meet); v != kNoVertex; v = backward_.parent(v))
      out.path.push_back(v);
    break;
  }
  return out;
}

SearchOutcome bidirectional_bfs(const HrgGraph& graph, Vertex s, Vertex t,
                                const AlternationStrategy& strategy) {
  BidirectionalBfs search(graph);
  return search.run(s, t, strategy);
}

namespace {

struct LayerProfile {
  std::vector<std::uint64_t> cost;       // degree sum of layer i
  std::vector<std::uint32_t> other_min;  // min distance from the other root over layer i
};

LayerProfile profile(const HrgGraph& graph, const BfsTree& mine, const BfsTree& other) {
  LayerProfile p;
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    const std::uint32_t d = mine.dist[v];
    if (d == kUnreached) continue;
    if (d >= p.cost.size()) {
      p.cost.resize(d + 1, 0);
      p.other_min.resize(d + 1, kUnreached);
    }
    p.cost[d] += graph.degree(v);
    p.other_min[d] = std::min(p.other_min[d], other.dist[v]);
  }
  return p;
}

class ScheduleEnumerator {
 public:
  ScheduleEnumerator(LayerProfile fwd, LayerProfile bwd) : side_{std::move(fwd), std::move(bwd)} {}

  ScheduleOptimum run() {
    recurse(0, 0, 0);
    return std::move(best_);
  }

 private:
  // Explores every continuation from the state where the forward search has reached
  // layer i and the backward search layer j.
  void recurse(std::uint32_t i, std::uint32_t j, std::uint64_t cost) {
    const std::uint32_t at[2] = {i, j};
    for (int s = 0; s < 2; ++s) {
      const LayerProfile& mine = side_[s];
      const std::uint32_t layer = at[s];
      if (layer >= mine.cost.size()) continue;  // frontier empty
      const std::uint64_t next_cost = cost + mine.cost[layer];
      current_.push_back(static_cast<Side>(s));
      const std::uint32_t next_layer = layer + 1;
      const bool meets = next_layer < mine.cost.size() && mine.other_min[next_layer] <= at[1 - s];
      if (meets) {
        ++best_.schedules;
        if (best_.schedules == 1 || next_cost < best_.min_cost) {
          best_.min_cost = next_cost;
          best_.best_schedule = current_;
        }
      } else {
        recurse(s == 0 ? next_layer : i, s == 1 ? next_layer : j, next_cost);
      }
      current_.pop_back();
    }
  }

  LayerProfile side_[2];
  std::vector<Side> current_;
  ScheduleOptimum best_;
};

}  // namespace

ScheduleOptimum enumerate_strategy_costs(const HrgGraph& graph, Vertex s, Vertex t,
                                         std::uint32_t max_layers) {
  check_vertex(graph, s, "enumerate_strategy_costs source");
  check_vertex(graph, t, "enumerate_strategy_costs target");
  if (max_layers > kMaxEnumerationLayers)
    throw std::invalid_argument("enumerate_strategy_costs: max_layers exceeds 20");
  if (s == t) return ScheduleOptimum{0, {}, 1};

  const BfsTree from_s = bfs(graph, s);
  const BfsTree from_t = bfs(graph, t);
  const std::uint32_t d = from_s.dist[t];
  if (d == kUnreached) throw std::invalid_argument("enumerate_strategy_costs: t unreachable from s");
  if (d > max_layers)
    throw std::invalid_argument("enumerate_strategy_costs: d(s, t) = " + std::to_string(d) +
                                " exceeds max_layers = " + std::to_string(max_layers));

  ScheduleEnumerator enumerator(profile(graph, from_s, from_t), profile(graph, from_t, from_s));
  return enumerator.run();
}

}  // namespace hrg

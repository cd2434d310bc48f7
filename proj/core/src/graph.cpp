#include "hrg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hrg {

HrgGraph::HrgGraph(ModelParams params, std::vector<PolarPoint> coords,
                   std::vector<std::uint64_t> offsets, std::vector<Vertex> neighbors)
    : params_(params),
      coords_(std::move(coords)),
      offsets_(std::move(offsets)),
      neighbors_(std::move(neighbors)) {
  validate();
}

HrgGraph HrgGraph::from_edges(ModelParams params, std::vector<PolarPoint> coords,
                              std::span<const std::pair<Vertex, Vertex>> edges) {
  const std::size_t n = coords.size();
  std::vector<std::uint64_t> offsets(n + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("from_edges: vertex id out of range");
    if (u == v) throw std::invalid_argument("from_edges: self-loop");
    ++offsets[u + 1];
    ++offsets[v + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<Vertex> neighbors(offsets[n]);
  std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [u, v] : edges) {
    neighbors[cursor[u]++] = v;
    neighbors[cursor[v]++] = u;
  }

  // Sort and dedup each list, then compact.
  std::vector<std::uint64_t> compact(n + 1, 0);
  std::uint64_t write = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto first = neighbors.begin() + static_cast<std::ptrdiff_t>(offsets[v]);
    auto last = neighbors.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    for (auto it = first; it != last; ++it) neighbors[write++] = *it;
    compact[v + 1] = write;
  }
  neighbors.resize(write);
  return HrgGraph(params, std::move(coords), std::move(compact), std::move(neighbors));
}

std::vector<std::uint32_t> HrgGraph::degrees() const {
  std::vector<std::uint32_t> out(num_vertices());
  for (Vertex v = 0; v < out.size(); ++v) out[v] = degree(v);
  return out;
}

std::uint32_t HrgGraph::max_degree() const noexcept {
  std::uint32_t best = 0;
  for (Vertex v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
  return best;
}

bool HrgGraph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  const auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

void HrgGraph::validate() const {
  const std::size_t n = coords_.size();
  auto fail = [](const std::string& what) { throw std::invalid_argument("HrgGraph: " + what); };
  if (offsets_.size() != n + 1) fail("offset array must have n + 1 entries");
  if (offsets_.front() != 0) fail("offset[0] must be 0");
  if (offsets_.back() != neighbors_.size()) fail("offset[n] must equal the neighbor count");
  if (neighbors_.size() % 2 != 0) fail("neighbor count must be even (2m)");
  if (n > std::numeric_limits<Vertex>::max()) fail("too many vertices for 32-bit ids");
  for (std::size_t v = 0; v < n; ++v) {
    if (offsets_[v] > offsets_[v + 1]) fail("offsets not monotone at vertex " + std::to_string(v));
  }
  for (Vertex v = 0; v < n; ++v) {
    const auto list = neighbors(v);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Vertex w = list[i];
      if (w >= n) fail("neighbor id out of range at vertex " + std::to_string(v));
      if (w == v) fail("self-loop at vertex " + std::to_string(v));
      if (i > 0 && list[i - 1] >= w)
        fail("neighbors of vertex " + std::to_string(v) + " not strictly ascending");
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : neighbors(v)) {
      if (!has_edge(w, v))
        fail("asymmetric edge " + std::to_string(v) + " -> " + std::to_string(w));
    }
  }
}

std::optional<std::pair<Vertex, Vertex>> HrgGraph::first_geometric_violation() const {
  const double cosh_R = std::cosh(params_.R);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    const CachedPoint cu(coords_[u]);
    for (Vertex v : neighbors(u)) {
      if (v < u) continue;
      if (!adjacent(cu, CachedPoint(coords_[v]), cosh_R)) return std::pair{u, v};
    }
  }
  return std::nullopt;
}

Component largest_component(const HrgGraph& graph) {
  const std::size_t n = graph.num_vertices();
  std::vector<Vertex> label(n, kNoVertex);
  std::vector<Vertex> stack;
  Vertex best_root = kNoVertex;
  std::size_t best_size = 0;

  // Roots are visited in ascending id order, so each component is labeled by its
  // smallest vertex and strict '>' keeps the earliest root on ties.
  for (Vertex root = 0; root < n; ++root) {
    if (label[root] != kNoVertex) continue;
    std::size_t size = 0;
    label[root] = root;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex w : graph.neighbors(v)) {
        if (label[w] == kNoVertex) {
          label[w] = root;
          stack.push_back(w);
        }
      }
    }
    if (size > best_size) {
      best_size = size;
      best_root = root;
    }
  }

  Component out;
  out.index_of.assign(n, kNoVertex);
  out.vertices.reserve(best_size);
  for (Vertex v = 0; v < n; ++v) {
    if (label[v] == best_root) {
      out.index_of[v] = static_cast<Vertex>(out.vertices.size());
      out.vertices.push_back(v);
    }
  }
  return out;
}

}  // namespace hrg

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hrg/geometry.hpp"

namespace hrg {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Immutable undirected graph with vertex coordinates, stored as symmetric CSR.
/// Neighbor lists are sorted ascending, loop-free and duplicate-free.
class HrgGraph {
 public:
  HrgGraph() = default;

  /// Takes ownership of a CSR layout and checks the structural invariants
  /// (offset shape, sortedness, symmetry, no loops). Throws std::invalid_argument.
  HrgGraph(ModelParams params, std::vector<PolarPoint> coords, std::vector<std::uint64_t> offsets,
           std::vector<Vertex> neighbors);

  /// Builds from an undirected edge list; duplicates and orientation are normalized away.
  static HrgGraph from_edges(ModelParams params, std::vector<PolarPoint> coords,
                             std::span<const std::pair<Vertex, Vertex>> edges);

  const ModelParams& params() const noexcept { return params_; }
  std::span<const PolarPoint> coords() const noexcept { return coords_; }
  const PolarPoint& coord(Vertex v) const noexcept { return coords_[v]; }

  std::size_t num_vertices() const noexcept { return coords_.size(); }
  std::uint64_t num_edges() const noexcept { return neighbors_.size() / 2; }

  std::span<const std::uint64_t> offsets() const noexcept { return offsets_; }
  std::span<const Vertex> neighbor_array() const noexcept { return neighbors_; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(Vertex v) const noexcept {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  std::vector<std::uint32_t> degrees() const;
  std::uint32_t max_degree() const noexcept;

  bool has_edge(Vertex u, Vertex v) const noexcept;

  /// Re-checks the structural invariants; throws std::invalid_argument naming the first violation.
  void validate() const;

  /// Checks that every stored edge satisfies the model's distance predicate.
  /// Returns the first violating edge (u < v), if any.
  std::optional<std::pair<Vertex, Vertex>> first_geometric_violation() const;

  friend bool operator==(const HrgGraph&, const HrgGraph&) = default;

 private:
  ModelParams params_{};
  std::vector<PolarPoint> coords_;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<Vertex> neighbors_;
};

/// Largest connected component with a compact relabeling.
struct Component {
  std::vector<Vertex> vertices;  // original ids, ascending
  std::vector<Vertex> index_of;  // original id -> compact index, kNoVertex outside

  std::size_t size() const noexcept { return vertices.size(); }
  bool contains(Vertex v) const noexcept { return index_of[v] != kNoVertex; }
};

/// Ties between equally large components go to the one with the smallest vertex id.
Component largest_component(const HrgGraph& graph);

}  // namespace hrg

#pragma once

// Reference implementations used only by tests. Each one avoids the code path it checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "hrg/graph.hpp"

namespace hrg::oracle {

using Big = boost::multiprecision::cpp_dec_float_50;

/// Hyperbolic law of cosines in 50-digit arithmetic.
inline double distance(double r1, double phi1, double r2, double phi2) {
  const Big a(r1), b(r2), d(phi1 - phi2);
  const Big c = cosh(a) * cosh(b) - sinh(a) * sinh(b) * cos(d);
  return static_cast<double>(acosh(c));
}

/// Largest Δ in [0, π] with distance <= R, by bisection on the 50-digit distance.
inline double theta_by_bisection(double r1, double r2, double R) {
  if (distance(r1, 0.0, r2, M_PI) <= R) return M_PI;
  double lo = 0.0, hi = M_PI;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (distance(r1, 0.0, r2, mid) <= R ? lo : hi) = mid;
  }
  return lo;
}

/// Distances by repeated edge relaxation until nothing changes.
inline std::vector<std::uint32_t> relaxation_distances(const HrgGraph& g, Vertex s) {
  constexpr std::uint32_t inf = 0xffffffffu;
  std::vector<std::uint32_t> dist(g.num_vertices(), inf);
  dist[s] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      if (dist[u] == inf) continue;
      for (Vertex v : g.neighbors(u)) {
        if (dist[u] + 1 < dist[v]) {
          dist[v] = dist[u] + 1;
          changed = true;
        }
      }
    }
  }
  return dist;
}

/// Component labels by union-find over the edge list.
inline std::vector<Vertex> component_labels(const HrgGraph& g) {
  std::vector<Vertex> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      const Vertex a = find(u), b = find(v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<Vertex> label(g.num_vertices());
  for (Vertex u = 0; u < g.num_vertices(); ++u) label[u] = find(u);
  return label;
}

/// Angle inside [start, start + width) with explicit wraparound branches.
inline bool in_arc(double phi, double start, double width) {
  const double end = start + width;
  if (width >= 2.0 * M_PI) return true;
  if (end <= 2.0 * M_PI) return phi >= start && phi < end;
  return phi >= start || phi < end - 2.0 * M_PI;
}

inline std::uint64_t sector_sum(const HrgGraph& g, double start, double width, double r_lo,
                                double r_hi) {
  std::uint64_t sum = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto& p = g.coord(v);
    if (p.radius >= r_lo && p.radius <= r_hi && in_arc(p.angle, start, width)) sum += g.degree(v);
  }
  return sum;
}

/// Exact eccentricity maximum by BFS from every vertex.
inline std::uint32_t all_pairs_diameter(const HrgGraph& g) {
  std::uint32_t best = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    for (auto d : relaxation_distances(g, s))
      if (d != 0xffffffffu) best = std::max(best, d);
  }
  return best;
}

}  // namespace hrg::oracle

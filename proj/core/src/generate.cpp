#include "hrg/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hrg/error.hpp"

namespace hrg {

namespace {

std::vector<CachedPoint> cache_points(std::span<const PolarPoint> coords) {
  std::vector<CachedPoint> out;
  out.reserve(coords.size());
  for (const auto& p : coords) out.emplace_back(p);
  return out;
}

// Radial band with its vertices bucketed into equal-width angular cells.
struct Band {
  double min_radius = 0.0;
  std::size_t num_cells = 1;
  std::vector<std::uint32_t> cell_offsets;  // num_cells + 1
  std::vector<Vertex> members;              // grouped by cell, ascending id inside a cell
};

class BandIndex {
 public:
  BandIndex(std::span<const PolarPoint> coords, double R) {
    const double ln2 = std::numbers::ln2;
    const auto count = static_cast<std::size_t>(std::max(1.0, std::ceil(R / (2.0 * ln2))));
    bands_.resize(count);

    std::vector<std::vector<Vertex>> members(count);
    for (Vertex v = 0; v < coords.size(); ++v) {
      const double depth = std::floor((R - coords[v].radius) / ln2);
      const auto b = static_cast<std::size_t>(std::clamp(depth, 0.0, static_cast<double>(count - 1)));
      members[b].push_back(v);
    }

    for (std::size_t b = 0; b < count; ++b) {
      Band& band = bands_[b];
      const auto& ids = members[b];
      band.num_cells = std::max<std::size_t>(1, ids.size() / 2);
      band.min_radius = ids.empty() ? 0.0 : coords[ids.front()].radius;
      std::vector<std::uint32_t> counts(band.num_cells + 1, 0);
      std::vector<std::uint32_t> cell_of(ids.size());
      for (std::size_t i = 0; i < ids.size(); ++i) {
        band.min_radius = std::min(band.min_radius, coords[ids[i]].radius);
        cell_of[i] = static_cast<std::uint32_t>(cell_index(coords[ids[i]].angle, band.num_cells));
        ++counts[cell_of[i] + 1];
      }
      for (std::size_t c = 0; c < band.num_cells; ++c) counts[c + 1] += counts[c];
      band.cell_offsets = counts;
      band.members.resize(ids.size());
      for (std::size_t i = 0; i < ids.size(); ++i) band.members[counts[cell_of[i]]++] = ids[i];
    }
  }

  const std::vector<Band>& bands() const noexcept { return bands_; }

  static std::size_t cell_index(double angle, std::size_t num_cells) noexcept {
    const double pos = std::floor(angle * static_cast<double>(num_cells) / kTwoPi);
    return static_cast<std::size_t>(std::clamp(pos, 0.0, static_cast<double>(num_cells - 1)));
  }

 private:
  std::vector<Band> bands_;
};

}  // namespace

PolarPoint sample_point(Xoshiro256& rng, const ModelParams& params) noexcept {
  const double angle = rng.uniform01() * kTwoPi;
  const double u = rng.uniform01();
  return PolarPoint(radius_from_uniform(u, params), angle);
}

std::vector<PolarPoint> sample_points(const ModelParams& params) {
  params.validate();
  Xoshiro256 rng(params.seed);
  std::vector<PolarPoint> coords;
  coords.reserve(params.n);
  for (std::uint64_t i = 0; i < params.n; ++i) coords.push_back(sample_point(rng, params));
  return coords;
}

HrgGraph connect_naive(const ModelParams& params, std::vector<PolarPoint> coords) {
  const auto cached = cache_points(coords);
  const double cosh_R = std::cosh(params.R);
  std::vector<std::pair<Vertex, Vertex>> edges;
  const auto n = static_cast<Vertex>(coords.size());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (adjacent(cached[u], cached[v], cosh_R)) edges.emplace_back(u, v);
    }
  }
  return HrgGraph::from_edges(params, std::move(coords), edges);
}

HrgGraph connect_fast(const ModelParams& params, std::vector<PolarPoint> coords) {
  const auto cached = cache_points(coords);
  const double R = params.R;
  const double cosh_R = std::cosh(R);
  const BandIndex index(coords, R);
  const auto n = static_cast<Vertex>(coords.size());

  std::vector<std::uint64_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> neighbors;
  neighbors.reserve(static_cast<std::size_t>(n) * 8);
  std::vector<Vertex> found;

  auto test = [&](Vertex u, Vertex v) {
    if (u == v) return;
    // Evaluate with the lower id first, exactly as connect_naive does.
    const bool hit = u < v ? adjacent(cached[u], cached[v], cosh_R)
                           : adjacent(cached[v], cached[u], cosh_R);
    if (hit) found.push_back(v);
  };

  for (Vertex u = 0; u < n; ++u) {
    found.clear();
    const double ru = coords[u].radius;
    const double phi = coords[u].angle;
    for (const Band& band : index.bands()) {
      if (band.members.empty()) continue;
      // theta_max is non-increasing in radius, so the band's smallest radius bounds the window.
      const double theta = theta_max(ru, band.min_radius, R) * (1.0 + 1e-9) + 1e-12;
      const auto cells = static_cast<std::ptrdiff_t>(band.num_cells);
      const double scale = static_cast<double>(band.num_cells) / kTwoPi;
      std::ptrdiff_t lo = 0;
      std::ptrdiff_t hi = cells - 1;
      if (theta < kPi) {
        // One spare cell on each side absorbs rounding in the cell arithmetic.
        lo = static_cast<std::ptrdiff_t>(std::floor((phi - theta) * scale)) - 1;
        hi = static_cast<std::ptrdiff_t>(std::floor((phi + theta) * scale)) + 1;
        if (hi - lo + 1 >= cells) {
          lo = 0;
          hi = cells - 1;
        }
      }
      for (std::ptrdiff_t c = lo; c <= hi; ++c) {
        const auto cell = static_cast<std::size_t>(((c % cells) + cells) % cells);
        for (std::uint32_t i = band.cell_offsets[cell]; i < band.cell_offsets[cell + 1]; ++i) {
          test(u, band.members[i]);
        }
      }
    }
    std::sort(found.begin(), found.end());
    neighbors.insert(neighbors.end(), found.begin(), found.end());
    offsets[u + 1] = neighbors.size();
  }
  neighbors.shrink_to_fit();
  return HrgGraph(params, std::move(coords), std::move(offsets), std::move(neighbors));
}

HrgGraph generate_naive(const ModelParams& params) {
  return connect_naive(params, sample_points(params));
}

HrgGraph generate_fast(const ModelParams& params) {
  return connect_fast(params, sample_points(params));
}

double calibrate_C(std::uint64_t n, double alpha, double target_avg_degree) {
  if (!(target_avg_degree > 0.0))
    throw std::invalid_argument("calibrate_C: target average degree must be positive");
  if (n < 2) throw std::invalid_argument("calibrate_C: n must be at least 2");

  const double two_ln_n = 2.0 * std::log(static_cast<double>(n));
  auto degree_at = [&](double C) {
    return expected_average_degree(ModelParams::with_C(n, alpha, C));
  };

  // R = 2 ln n + C must stay positive.
  double lo = std::max(-10.0, -two_ln_n + 1e-3);
  double hi = 10.0;
  const double deg_lo = degree_at(lo);
  const double deg_hi = degree_at(hi);
  if (target_avg_degree > deg_lo || target_avg_degree < deg_hi) {
    std::ostringstream msg;
    msg << "calibrate_C: target average degree " << target_avg_degree
        << " outside the reachable range [" << deg_hi << ", " << deg_lo << "] for n=" << n
        << ", alpha=" << alpha << ", C in [" << lo << ", " << hi << "]";
    throw CalibrationError(msg.str());
  }

  // Average degree decreases in C.
  while (hi - lo > 1e-7) {
    const double mid = 0.5 * (lo + hi);
    const double deg = degree_at(mid);
    if (std::abs(deg - target_avg_degree) <= 1e-5 * target_avg_degree) return mid;
    if (deg > target_avg_degree) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

ModelParams calibrated_params(std::uint64_t n, double alpha, double target_avg_degree,
                              std::uint64_t seed) {
  return ModelParams::with_C(n, alpha, calibrate_C(n, alpha, target_avg_degree), seed);
}

}  // namespace hrg

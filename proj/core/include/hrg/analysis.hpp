#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hrg/graph.hpp"

namespace hrg {

// ---------------------------------------------------------------------------
// Power-law tail

inline constexpr std::uint32_t kPowerLawFloor = 10;
inline constexpr std::size_t kPowerLawMinTail = 1000;

struct PowerLawFit {
  double beta = 0.0;
  std::size_t tail_count = 0;  // samples with degree >= k_floor
  std::uint32_t k_floor = kPowerLawFloor;
};

/// Hurwitz zeta ζ(s, q) = Σ_{k>=0} (k + q)^{-s}, for s > 1 and q >= 1.
double hurwitz_zeta(double s, double q);

/// Discrete maximum-likelihood exponent of P(k) ∝ k^{-β} over k >= k_floor.
/// Throws InsufficientDataError with fewer than `min_tail` tail samples or when the
/// tail holds a single distinct value.
PowerLawFit fit_power_law(std::span<const std::uint32_t> degrees,
                          std::uint32_t k_floor = kPowerLawFloor,
                          std::size_t min_tail = kPowerLawMinTail);

// ---------------------------------------------------------------------------
// Scaling fits

struct ScalingFit {
  std::vector<std::pair<double, double>> points;  // (n, measured value)
  double exponent = 0.0;                          // least-squares slope in log-log space
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Throws std::invalid_argument with fewer than 3 points or a non-positive coordinate.
ScalingFit fit_scaling(std::vector<std::pair<double, double>> points);

/// Builds the graph measured for one (n, seed) cell of a scaling experiment.
using GraphFactory = std::function<HrgGraph(std::uint64_t n, std::uint64_t seed)>;

/// Factory producing calibrated HRGs at the given average degree. C is calibrated once per n.
GraphFactory hrg_factory(double alpha, double avg_degree);

struct ScalingSample {
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  double value = 0.0;
};

struct ScalingRun {
  ScalingFit fit;
  std::vector<ScalingSample> samples;  // one per (n, seed), in input order
};

/// Mean maximum degree per n over `seeds_per_n` graphs, fitted against n.
/// Requires >= 3 distinct n values spanning at least one decade.
ScalingRun max_degree_scaling(const GraphFactory& factory, std::span<const std::uint64_t> ns,
                              std::size_t seeds_per_n, std::uint64_t master_seed);

// ---------------------------------------------------------------------------
// Sectors

/// Angular interval [start, start + width) (with wraparound) times radial band [r_lo, r_hi].
struct SectorSpec {
  double start_angle = 0.0;
  double width = kTwoPi;
  double r_lo = 0.0;
  double r_hi = std::numeric_limits<double>::infinity();

  /// Throws std::invalid_argument unless 0 < width <= 2π and r_lo <= r_hi.
  void validate() const;
  bool contains(const PolarPoint& p) const noexcept;
};

std::uint64_t sector_degree_sum(const HrgGraph& graph, const SectorSpec& sector);

/// Sector width n^{1 - 1/α} ln n used by the sector scaling experiment, capped at 2π.
double sector_width(std::uint64_t n, double alpha);

/// Maximum sector_degree_sum over `count` full-band sectors of the given width at
/// uniformly random start angles drawn from `seed`.
std::uint64_t max_sector_degree_sum(const HrgGraph& graph, double width, std::size_t count,
                                    std::uint64_t seed);

/// For each n: the max over 100 random sectors of width sector_width(n, α), averaged
/// over `seeds_per_n` graphs; fitted against n.
ScalingRun sector_sum_scaling(const GraphFactory& factory, double alpha,
                              std::span<const std::uint64_t> ns, std::size_t seeds_per_n,
                              std::uint64_t master_seed, std::size_t sectors = 100);

// ---------------------------------------------------------------------------
// Inner disk and phase-one width

enum class InnerDiskStatus {
  witness,              // a vertex of radius <= R - ρ adjacent to every inner vertex
  vacuous,              // no vertex has radius <= ρ
  no_candidate,         // no vertex has radius <= R - ρ
  verification_failed,  // candidate exists but misses an inner vertex
};

struct InnerDiskResult {
  InnerDiskStatus status = InnerDiskStatus::no_candidate;
  std::optional<Vertex> witness;      // candidate vertex (also set on verification_failed)
  std::optional<Vertex> missed;       // inner vertex not adjacent to the candidate
  std::size_t inner_vertices = 0;     // vertices with radius <= ρ
};

InnerDiskResult inner_disk_check(const HrgGraph& graph, double rho);

struct PhaseOneWidth {
  double width = 0.0;            // 2 × max angular distance from s, in [0, 2π]
  bool source_in_inner_disk = false;
  std::uint32_t layers = 0;      // BFS layers visited before stopping
  std::size_t visited = 0;
};

/// BFS from s that stops before the first layer containing a vertex of radius <= rho.
PhaseOneWidth phase_one_width(const HrgGraph& graph, Vertex s, double rho);

// ---------------------------------------------------------------------------
// Diameter

enum class DiameterMode { exact, estimate };

inline constexpr std::size_t kExactDiameterLimit = 10'000;
inline constexpr std::size_t kDoubleSweeps = 20;

/// exact: max eccentricity over all vertices (every component); requires every
/// component to have at most 10^4 vertices. estimate: best of 20 double sweeps started
/// in the largest component, a lower bound on the exact value.
std::uint32_t diameter(const HrgGraph& graph, DiameterMode mode, std::uint64_t seed = 0);

/// Exact diameter of the component containing `v`.
std::uint32_t component_diameter(const HrgGraph& graph, Vertex v);

}  // namespace hrg

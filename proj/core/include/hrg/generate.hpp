#pragma once

#include <cstdint>
#include <vector>

#include "hrg/geometry.hpp"
#include "hrg/graph.hpp"
#include "hrg/rng.hpp"

namespace hrg {

/// Draws one vertex position. Consumes exactly two draws from `rng`: the angle first,
/// then the uniform variate that is inverted through mu_disk.
PolarPoint sample_point(Xoshiro256& rng, const ModelParams& params) noexcept;

/// Positions of all n vertices for `params.seed`, in vertex order.
std::vector<PolarPoint> sample_points(const ModelParams& params);

/// Tests every vertex pair against the distance predicate. Θ(n²); meant for n up to ~2·10⁴
/// and as the reference for generate_fast.
HrgGraph generate_naive(const ModelParams& params);

/// Same edge set as generate_naive, in expected O(n + m) time. Vertices are bucketed
/// into radial bands [R - (k+1) ln 2, R - k ln 2) and, within each band, into angular
/// cells holding about two vertices each; a vertex only tests cells whose angular
/// window can contain a neighbor.
HrgGraph generate_fast(const ModelParams& params);

/// Builds edges for fixed coordinates; exposed for benchmarks and cross-checks.
HrgGraph connect_naive(const ModelParams& params, std::vector<PolarPoint> coords);
HrgGraph connect_fast(const ModelParams& params, std::vector<PolarPoint> coords);

/// Finds C such that the expected average degree equals `target_avg_degree` to within
/// 1e-5 relative, by bisection on C in [-10, 10]. Throws CalibrationError when the
/// target lies outside the bracket.
double calibrate_C(std::uint64_t n, double alpha, double target_avg_degree);

/// Parameters for n vertices at average degree `target_avg_degree`.
ModelParams calibrated_params(std::uint64_t n, double alpha, double target_avg_degree,
                              std::uint64_t seed);

}  // namespace hrg

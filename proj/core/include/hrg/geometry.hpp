#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace hrg {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Maps any finite angle into [0, 2π).
inline double normalize_angle(double phi) noexcept {
  if (phi >= 0.0 && phi < kTwoPi) return phi;
  double wrapped = std::fmod(phi, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  // fmod of a tiny negative value can round back up to exactly 2π.
  return wrapped >= kTwoPi ? 0.0 : wrapped;
}

/// Hyperbolic polar coordinate. The angle is normalized on construction.
struct PolarPoint {
  double radius = 0.0;
  double angle = 0.0;

  PolarPoint() = default;
  PolarPoint(double r, double phi) noexcept : radius(r), angle(normalize_angle(phi)) {}

  friend bool operator==(const PolarPoint&, const PolarPoint&) = default;
};

/// Generative parameters of the threshold model: n points in a disk of radius R with
/// radial density proportional to sinh(alpha * r).
struct ModelParams {
  std::uint64_t n = 0;
  double alpha = 0.75;
  double R = 0.0;
  std::uint64_t seed = 0;

  /// R = 2 ln n + C.
  static ModelParams with_C(std::uint64_t n, double alpha, double C, std::uint64_t seed = 0);

  double C() const noexcept { return R - 2.0 * std::log(static_cast<double>(n)); }

  /// Throws std::invalid_argument unless n >= 1, alpha in (0.5, 1) and R > 0.
  void validate() const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Shorter arc between two angles, in [0, π].
inline double angular_distance(double phi1, double phi2) noexcept {
  const double d = std::abs(normalize_angle(phi1) - normalize_angle(phi2));
  return kPi - std::abs(kPi - d);
}

double hyperbolic_distance(const PolarPoint& p1, const PolarPoint& p2) noexcept;

/// Largest angular distance at which points of radii r1 and r2 are still within
/// distance R. Returns π when r1 + r2 <= R.
double theta_max(double r1, double r2, double R) noexcept;

/// Point with the hyperbolic sine of its radius precomputed; feeds the adjacency kernel.
struct CachedPoint {
  double radius;
  double angle;
  double sinh_radius;

  explicit CachedPoint(const PolarPoint& p) noexcept
      : radius(p.radius), angle(p.angle), sinh_radius(std::sinh(p.radius)) {}
};

/// The model's edge predicate, dist(p, q) <= R, evaluated as
/// cosh(r1 - r2) + 2 sin^2(Δ/2) sinh(r1) sinh(r2) <= cosh(R).
/// Every builder and checker calls this exact expression so results agree bit for bit.
inline bool adjacent(const CachedPoint& p, const CachedPoint& q, double cosh_R) noexcept {
  const double delta = angular_distance(p.angle, q.angle);
  const double half = std::sin(0.5 * delta);
  // The sinh product is formed first so the predicate is symmetric in p and q.
  return std::cosh(p.radius - q.radius) + 2.0 * half * half * (p.sinh_radius * q.sinh_radius) <=
         cosh_R;
}

inline bool adjacent(const PolarPoint& p, const PolarPoint& q, double R) noexcept {
  return adjacent(CachedPoint(p), CachedPoint(q), std::cosh(R));
}

/// Probability density of a vertex radius on [0, R] (angle already integrated out).
double radial_density(double r, const ModelParams& params) noexcept;

/// Measure of the origin-centered disk of radius r: (cosh(αr) - 1) / (cosh(αR) - 1).
double mu_disk(double r, const ModelParams& params) noexcept;

/// Inverse of mu_disk: radius whose disk carries probability u.
double radius_from_uniform(double u, const ModelParams& params) noexcept;

/// n times the probability that a uniformly sampled vertex lies within distance R of a
/// point at radius r. Evaluated by tanh-sinh quadrature at relative tolerance 1e-8;
/// throws NumericalError if the quadrature error estimate does not meet it.
double expected_degree_at_radius(double r, const ModelParams& params);

/// Expected average degree of the whole graph: ∫ f(r) · expected_degree_at_radius(r) dr.
double expected_average_degree(const ModelParams& params);

/// (1/α)(ln n - ln ln n): the radius of the inner disk whose vertices share a neighbor whp.
double inner_disk_radius(std::uint64_t n, double alpha);

}  // namespace hrg

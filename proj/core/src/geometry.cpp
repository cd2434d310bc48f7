#include "hrg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "hrg/error.hpp"

namespace hrg {

namespace {

constexpr double kQuadratureTolerance = 1e-8;

// Accept an error estimate up to this multiple of the requested tolerance before
// declaring non-convergence; tanh-sinh estimates are conservative.
constexpr double kQuadratureSlack = 100.0;

// `scale` is the magnitude the error is judged against, so a negligible piece of a
// larger sum is not held to a relative tolerance of its own.
template <class F>
double integrate(F&& f, double lo, double hi, double scale, const char* what) {
  if (!(hi > lo)) return 0.0;
  boost::math::quadrature::tanh_sinh<double> integrator(15);
  double error = 0.0;
  double l1 = 0.0;
  std::size_t levels = 0;
  const double value =
      integrator.integrate(f, lo, hi, kQuadratureTolerance, &error, &l1, &levels);
  // Boost 1.74 rescales L1 to [lo, hi] but leaves the error estimate on [-1, 1].
  error *= 0.5 * (hi - lo);
  if (!std::isfinite(value) || error > kQuadratureSlack * kQuadratureTolerance * std::max({l1, scale, 1e-300})) {
    std::ostringstream msg;
    msg << what << ": quadrature on [" << lo << ", " << hi << "] did not converge (value "
        << value << ", error estimate " << error << ", L1 " << l1 << ", levels " << levels
        << ")";
    throw NumericalError(msg.str());
  }
  return value;
}

}  // namespace

ModelParams ModelParams::with_C(std::uint64_t n, double alpha, double C, std::uint64_t seed) {
  ModelParams params;
  params.n = n;
  params.alpha = alpha;
  params.R = 2.0 * std::log(static_cast<double>(n)) + C;
  params.seed = seed;
  params.validate();
  return params;
}

void ModelParams::validate() const {
  if (n < 1) throw std::invalid_argument("ModelParams: n must be at least 1");
  if (!(alpha > 0.5 && alpha < 1.0))
    throw std::invalid_argument("ModelParams: alpha must lie strictly inside (0.5, 1)");
  if (!(R > 0.0) || !std::isfinite(R))
    throw std::invalid_argument("ModelParams: R must be positive and finite");
}

double hyperbolic_distance(const PolarPoint& p1, const PolarPoint& p2) noexcept {
  const double delta = angular_distance(p1.angle, p2.angle);
  const double half = std::sin(0.5 * delta);
  const double cosh_dist = std::cosh(p1.radius - p2.radius) +
                           2.0 * half * half * (std::sinh(p1.radius) * std::sinh(p2.radius));
  return std::acosh(std::max(1.0, cosh_dist));
}

double theta_max(double r1, double r2, double R) noexcept {
  if (r1 + r2 <= R) return kPi;
  // 2 sin^2(θ/2) = (cosh R - cosh(r1 - r2)) / (sinh r1 sinh r2)
  const double numerator = std::cosh(R) - std::cosh(r1 - r2);
  if (numerator <= 0.0) return 0.0;
  const double ratio = numerator / (2.0 * std::sinh(r1) * std::sinh(r2));
  if (ratio >= 1.0) return kPi;
  return 2.0 * std::asin(std::sqrt(ratio));
}

double radial_density(double r, const ModelParams& params) noexcept {
  if (r < 0.0 || r > params.R) return 0.0;
  return params.alpha * std::sinh(params.alpha * r) / (std::cosh(params.alpha * params.R) - 1.0);
}

double mu_disk(double r, const ModelParams& params) noexcept {
  if (r <= 0.0) return 0.0;
  if (r >= params.R) return 1.0;
  // cosh(x) - 1 = 2 sinh^2(x/2) keeps precision for small αr.
  const double num = std::sinh(0.5 * params.alpha * r);
  const double den = std::sinh(0.5 * params.alpha * params.R);
  const double ratio = num / den;
  return ratio * ratio;
}

double radius_from_uniform(double u, const ModelParams& params) noexcept {
  const double r =
      std::acosh(1.0 + u * (std::cosh(params.alpha * params.R) - 1.0)) / params.alpha;
  return std::clamp(r, 0.0, params.R);
}

double expected_degree_at_radius(double r, const ModelParams& params) {
  const double R = params.R;
  r = std::clamp(r, 0.0, R);
  // Every r' <= R - r is adjacent at all angles.
  const double full = mu_disk(R - r, params);
  const double partial = integrate(
      [&](double rr) { return radial_density(rr, params) * theta_max(r, rr, R) / kPi; },
      R - r, R, full, "expected_degree_at_radius");
  return static_cast<double>(params.n) * (full + partial);
}

double expected_average_degree(const ModelParams& params) {
  return integrate(
      [&](double r) { return radial_density(r, params) * expected_degree_at_radius(r, params); },
      0.0, params.R, 0.0, "expected_average_degree");
}

double inner_disk_radius(std::uint64_t n, double alpha) {
  if (n < 3) throw std::invalid_argument("inner_disk_radius: n must be at least 3");
  const double ln_n = std::log(static_cast<double>(n));
  return (ln_n - std::log(ln_n)) / alpha;
}

}  // namespace hrg

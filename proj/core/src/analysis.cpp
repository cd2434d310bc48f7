#include "hrg/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/math/tools/minima.hpp>

#include "hrg/error.hpp"
#include "hrg/generate.hpp"
#include "hrg/rng.hpp"
#include "hrg/search.hpp"

namespace hrg {

double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0)) throw std::invalid_argument("hurwitz_zeta: s must exceed 1");
  if (!(q >= 1.0)) throw std::invalid_argument("hurwitz_zeta: q must be at least 1");
  // Direct sum of the first terms, Euler-Maclaurin for the tail.
  constexpr int kDirect = 12;
  double sum = 0.0;
  for (int k = 0; k < kDirect; ++k) sum += std::pow(k + q, -s);
  const double a = kDirect + q;
  sum += std::pow(a, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(a, -s);
  // B_{2j} / (2j)!
  constexpr double kBernoulli[] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0,
                                   1.0 / 47900160.0, -691.0 / 1307674368000.0};
  double rising = s;  // s (s+1) ... (s + 2j - 2)
  double power = std::pow(a, -s - 1.0);
  for (int j = 0; j < 6; ++j) {
    sum += kBernoulli[j] * rising * power;
    rising *= (s + 2 * j + 1) * (s + 2 * j + 2);
    power /= a * a;
  }
  return sum;
}

PowerLawFit fit_power_law(std::span<const std::uint32_t> degrees, std::uint32_t k_floor,
                          std::size_t min_tail) {
  if (k_floor < 1) throw std::invalid_argument("fit_power_law: k_floor must be at least 1");
  std::size_t count = 0;
  double log_sum = 0.0;
  std::uint32_t lo = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t hi = 0;
  for (std::uint32_t k : degrees) {
    if (k < k_floor) continue;
    ++count;
    log_sum += std::log(static_cast<double>(k));
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  if (count < min_tail || count == 0) {
    throw InsufficientDataError("fit_power_law: " + std::to_string(count) +
                                " samples with degree >= " + std::to_string(k_floor) +
                                ", need at least " + std::to_string(min_tail));
  }
  if (lo == hi) {
    throw InsufficientDataError("fit_power_law: all tail degrees equal " + std::to_string(lo) +
                                "; the exponent is unbounded");
  }

  const double mean_log = log_sum / static_cast<double>(count);
  const double q = k_floor;
  // Negative log-likelihood per sample.
  auto nll = [&](double beta) { return beta * mean_log + std::log(hurwitz_zeta(beta, q)); };
  const auto [beta, value] = boost::math::tools::brent_find_minima(nll, 1.0001, 20.0, std::numeric_limits<double>::digits / 2);
  (void)value;
  return PowerLawFit{beta, count, k_floor};
}

ScalingFit fit_scaling(std::vector<std::pair<double, double>> points) {
  if (points.size() < 3) throw std::invalid_argument("fit_scaling: need at least 3 points");
  double sx = 0, sy = 0;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0))
      throw std::invalid_argument("fit_scaling: coordinates must be positive");
    sx += std::log(x);
    sy += std::log(y);
  }
  const double k = static_cast<double>(points.size());
  const double mx = sx / k;
  const double my = sy / k;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [x, y] : points) {
    const double dx = std::log(x) - mx;
    const double dy = std::log(y) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_scaling: all x values are equal");
  ScalingFit fit;
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  fit.points = std::move(points);
  return fit;
}

GraphFactory hrg_factory(double alpha, double avg_degree) {
  struct Cache {
    std::mutex mutex;
    std::map<std::uint64_t, double> c_of_n;
  };
  auto cache = std::make_shared<Cache>();
  return [alpha, avg_degree, cache](std::uint64_t n, std::uint64_t seed) {
    double C = 0.0;
    {
      std::lock_guard lock(cache->mutex);
      auto it = cache->c_of_n.find(n);
      if (it == cache->c_of_n.end()) it = cache->c_of_n.emplace(n, calibrate_C(n, alpha, avg_degree)).first;
      C = it->second;
    }
    return generate_fast(ModelParams::with_C(n, alpha, C, seed));
  };
}

namespace {

void check_distinct_ns(std::span<const std::uint64_t> ns, bool require_decade, const char* what) {
  std::vector<std::uint64_t> sorted(ns.begin(), ns.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() < 3 || sorted.front() == 0)
    throw std::invalid_argument(std::string(what) + ": need at least 3 distinct positive n");
  if (require_decade && sorted.back() < 10 * sorted.front())
    throw std::invalid_argument(std::string(what) + ": n values must span at least one decade");
}

template <class Measure>
ScalingRun run_scaling(const GraphFactory& factory, std::span<const std::uint64_t> ns,
                       std::size_t seeds_per_n, std::uint64_t master_seed, Measure&& measure) {
  if (seeds_per_n == 0) throw std::invalid_argument("scaling: seeds_per_n must be positive");
  ScalingRun run;
  std::vector<std::pair<double, double>> points;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    double total = 0.0;
    for (std::size_t k = 0; k < seeds_per_n; ++k) {
      const std::uint64_t seed = derive_seed(master_seed, {i, k});
      const HrgGraph graph = factory(ns[i], seed);
      const double value = measure(graph, seed);
      run.samples.push_back({ns[i], seed, value});
      total += value;
    }
    points.emplace_back(static_cast<double>(ns[i]), total / static_cast<double>(seeds_per_n));
  }
  run.fit = fit_scaling(std::move(points));
  return run;
}

}  // namespace

ScalingRun max_degree_scaling(const GraphFactory& factory, std::span<const std::uint64_t> ns,
                              std::size_t seeds_per_n, std::uint64_t master_seed) {
  check_distinct_ns(ns, true, "max_degree_scaling");
  return run_scaling(factory, ns, seeds_per_n, master_seed,
                     [](const HrgGraph& g, std::uint64_t) { return double(g.max_degree()); });
}

void SectorSpec::validate() const {
  if (!(width > 0.0 && width <= kTwoPi))
    throw std::invalid_argument("SectorSpec: width must lie in (0, 2pi]");
  if (!(r_lo <= r_hi)) throw std::invalid_argument("SectorSpec: r_lo must not exceed r_hi");
}

bool SectorSpec::contains(const PolarPoint& p) const noexcept {
  if (p.radius < r_lo || p.radius > r_hi) return false;
  if (width >= kTwoPi) return true;
  // Explicit bounds, so a sector ending at x and one starting at x share no vertex.
  const double start = normalize_angle(start_angle);
  const double end = start + width;
  if (end <= kTwoPi) return p.angle >= start && p.angle < end;
  return p.angle >= start || p.angle < end - kTwoPi;
}

std::uint64_t sector_degree_sum(const HrgGraph& graph, const SectorSpec& sector) {
  sector.validate();
  std::uint64_t sum = 0;
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    if (sector.contains(graph.coord(v))) sum += graph.degree(v);
  }
  return sum;
}

double sector_width(std::uint64_t n, double alpha) {
  const double x = static_cast<double>(n);
  return std::min(kTwoPi, std::pow(x, 1.0 - 1.0 / alpha) * std::log(x));
}

std::uint64_t max_sector_degree_sum(const HrgGraph& graph, double width, std::size_t count,
                                    std::uint64_t seed) {
  Xoshiro256 rng(seed);
  std::uint64_t best = 0;
  for (std::size_t i = 0; i < count; ++i) {
    SectorSpec sector;
    sector.start_angle = rng.uniform01() * kTwoPi;
    sector.width = width;
    best = std::max(best, sector_degree_sum(graph, sector));
  }
  return best;
}

ScalingRun sector_sum_scaling(const GraphFactory& factory, double alpha,
                              std::span<const std::uint64_t> ns, std::size_t seeds_per_n,
                              std::uint64_t master_seed, std::size_t sectors) {
  check_distinct_ns(ns, false, "sector_sum_scaling");
  return run_scaling(factory, ns, seeds_per_n, master_seed,
                     [&](const HrgGraph& g, std::uint64_t seed) {
                       const double width = sector_width(g.num_vertices(), alpha);
                       return double(max_sector_degree_sum(g, width, sectors, seed ^ 0x5EC7u));
                     });
}

InnerDiskResult inner_disk_check(const HrgGraph& graph, double rho) {
  InnerDiskResult result;
  const double R = graph.params().R;
  std::optional<Vertex> candidate;
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    const double r = graph.coord(v).radius;
    if (r <= rho) ++result.inner_vertices;
    if (r <= R - rho && (!candidate || r < graph.coord(*candidate).radius)) candidate = v;
  }
  if (result.inner_vertices == 0) {
    result.status = InnerDiskStatus::vacuous;
    return result;
  }
  if (!candidate) {
    result.status = InnerDiskStatus::no_candidate;
    return result;
  }
  result.witness = candidate;
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    if (v == *candidate || graph.coord(v).radius > rho) continue;
    if (!graph.has_edge(*candidate, v)) {
      result.status = InnerDiskStatus::verification_failed;
      result.missed = v;
      return result;
    }
  }
  result.status = InnerDiskStatus::witness;
  return result;
}

PhaseOneWidth phase_one_width(const HrgGraph& graph, Vertex s, double rho) {
  if (s >= graph.num_vertices()) throw std::invalid_argument("phase_one_width: vertex out of range");
  PhaseOneWidth out;
  if (graph.coord(s).radius <= rho) {
    out.source_in_inner_disk = true;
    return out;
  }
  const double origin = graph.coord(s).angle;
  std::vector<bool> seen(graph.num_vertices(), false);
  std::vector<Vertex> layer{s}, next;
  seen[s] = true;
  out.visited = 1;
  double max_gap = 0.0;
  for (;;) {
    next.clear();
    bool hits_inner = false;
    for (Vertex v : layer) {
      for (Vertex w : graph.neighbors(v)) {
        if (seen[w]) continue;
        seen[w] = true;
        next.push_back(w);
        if (graph.coord(w).radius <= rho) hits_inner = true;
      }
    }
    if (next.empty() || hits_inner) break;
    for (Vertex w : next) max_gap = std::max(max_gap, angular_distance(origin, graph.coord(w).angle));
    out.visited += next.size();
    ++out.layers;
    layer.swap(next);
  }
  out.width = std::min(kTwoPi, 2.0 * max_gap);
  return out;
}

namespace {

// Eccentricity of v and the farthest vertex (smallest id on ties).
std::pair<std::uint32_t, Vertex> eccentricity(const HrgGraph& graph, Vertex v) {
  const BfsTree tree = bfs(graph, v);
  std::uint32_t ecc = 0;
  Vertex far = v;
  for (Vertex w = 0; w < graph.num_vertices(); ++w) {
    if (tree.dist[w] != kUnreached && tree.dist[w] > ecc) {
      ecc = tree.dist[w];
      far = w;
    }
  }
  return {ecc, far};
}

}  // namespace

std::uint32_t diameter(const HrgGraph& graph, DiameterMode mode, std::uint64_t seed) {
  const auto n = static_cast<Vertex>(graph.num_vertices());
  if (n == 0) return 0;
  if (mode == DiameterMode::exact) {
    if (largest_component(graph).size() > kExactDiameterLimit)
      throw std::invalid_argument("diameter: exact mode limited to components of 10^4 vertices");
    std::uint32_t best = 0;
    for (Vertex v = 0; v < n; ++v) best = std::max(best, eccentricity(graph, v).first);
    return best;
  }
  // Sweeps start inside the largest component, where the diameter is attained whp.
  const Component component = largest_component(graph);
  Xoshiro256 rng(seed);
  std::uint32_t best = 0;
  for (std::size_t sweep = 0; sweep < kDoubleSweeps; ++sweep) {
    const Vertex start = component.vertices[rng.below(component.size())];
    const Vertex far = eccentricity(graph, start).second;
    best = std::max(best, eccentricity(graph, far).first);
  }
  return best;
}

std::uint32_t component_diameter(const HrgGraph& graph, Vertex v) {
  const BfsTree tree = bfs(graph, v);
  std::uint32_t best = 0;
  for (Vertex w = 0; w < graph.num_vertices(); ++w) {
    if (tree.dist[w] != kUnreached) best = std::max(best, eccentricity(graph, w).first);
  }
  return best;
}

}  // namespace hrg

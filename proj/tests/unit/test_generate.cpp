#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "hrg/error.hpp"
#include "hrg/generate.hpp"
#include "hrg/rng.hpp"
#include "oracles.hpp"

namespace hrg {
namespace {

using EdgeSet = std::set<std::pair<Vertex, Vertex>>;

EdgeSet edges_of(const HrgGraph& g) {
  EdgeSet out;
  for (Vertex u = 0; u < g.num_vertices(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v) out.emplace(u, v);
  return out;
}

TEST(SamplePoint, ConsumesTwoDrawsAngleFirst) {
  const ModelParams params = ModelParams::with_C(1000, 0.75, 0.0, 0);
  Xoshiro256 rng(42), copy(42);
  const PolarPoint p = sample_point(rng, params);
  const double angle = copy.uniform01() * kTwoPi;
  const double radius = radius_from_uniform(copy.uniform01(), params);
  EXPECT_EQ(p.angle, angle);
  EXPECT_EQ(p.radius, radius);
  EXPECT_TRUE(rng == copy);
}

TEST(SamplePoints, EmpiricalCdfsMatchClosedForms) {
  const ModelParams params = ModelParams::with_C(1'000'000, 0.75, 0.0, 8);
  auto points = sample_points(params);
  std::vector<double> radii, angles;
  for (const auto& p : points) {
    radii.push_back(p.radius);
    angles.push_back(p.angle);
  }
  std::sort(radii.begin(), radii.end());
  std::sort(angles.begin(), angles.end());
  const double n = static_cast<double>(radii.size());
  double radius_sup = 0.0, angle_sup = 0.0;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double lo = static_cast<double>(i) / n, hi = static_cast<double>(i + 1) / n;
    const double f = mu_disk(radii[i], params);
    radius_sup = std::max({radius_sup, std::abs(f - lo), std::abs(f - hi)});
    const double g = angles[i] / kTwoPi;
    angle_sup = std::max({angle_sup, std::abs(g - lo), std::abs(g - hi)});
  }
  EXPECT_LT(radius_sup, 0.002);
  EXPECT_LT(angle_sup, 0.002);
  EXPECT_GE(angles.front(), 0.0);
  EXPECT_LT(angles.back(), kTwoPi);
}

TEST(GenerateNaive, SingleVertexHasNoEdges) {
  const HrgGraph g = generate_naive(ModelParams::with_C(1, 0.75, 1.0, 3));
  EXPECT_EQ(g.num_vertices(), 1u);
  EXPECT_EQ(g.num_edges(), 0u);
}

TEST(GenerateNaive, TwoPointsAtOriginAreAdjacent) {
  const ModelParams params = ModelParams::with_C(2, 0.75, 0.0, 0);
  const std::vector<PolarPoint> coords{{0.0, 0.0}, {0.0, 0.0}};
  EXPECT_EQ(connect_naive(params, coords).num_edges(), 1u);
  EXPECT_EQ(connect_fast(params, coords).num_edges(), 1u);
}

// Independent predicate: the law of cosines in long double, with no shared kernel.
TEST(GenerateNaive, MatchesDirectPredicateOnAllPairs) {
  const ModelParams params = ModelParams::with_C(500, 0.75, 0.0, 12345);
  const HrgGraph g = generate_naive(params);
  const auto& c = g.coords();
  const long double cosh_R = std::cosh(static_cast<long double>(params.R));
  EdgeSet expected;
  std::size_t near_ties = 0;
  for (Vertex u = 0; u < c.size(); ++u) {
    for (Vertex v = u + 1; v < c.size(); ++v) {
      const long double r1 = c[u].radius, r2 = c[v].radius;
      const long double d = static_cast<long double>(c[u].angle) - c[v].angle;
      const long double ch = std::cosh(r1) * std::cosh(r2) - std::sinh(r1) * std::sinh(r2) * std::cos(d);
      if (std::abs(ch - cosh_R) < 1e-12L * cosh_R) ++near_ties;
      if (ch <= cosh_R) expected.emplace(u, v);
    }
  }
  EXPECT_EQ(near_ties, 0u);
  EXPECT_EQ(edges_of(g), expected);
  EXPECT_GT(expected.size(), 500u);
}

TEST(GenerateFast, EqualsNaive) {
  for (double alpha : {0.55, 0.75, std::nextafter(0.95, 0.0)}) {
    for (std::uint64_t n : {1u, 2u, 3u, 10u, 100u, 2000u}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const ModelParams params = ModelParams::with_C(n, alpha, n > 1 ? -0.5 : 1.0, seed);
        ASSERT_EQ(generate_fast(params), generate_naive(params))
            << "alpha=" << alpha << " n=" << n << " seed=" << seed;
      }
    }
  }
}

TEST(GenerateFast, EqualsNaiveAcrossRadiusOffsets) {
  for (double C : {-3.0, 0.0, 2.0, 6.0}) {
    const ModelParams params = ModelParams::with_C(3000, 0.7, C, 77);
    EXPECT_EQ(generate_fast(params), generate_naive(params)) << "C=" << C;
  }
}

TEST(GenerateFast, Deterministic) {
  const ModelParams params = ModelParams::with_C(20000, 0.8, 0.0, 5);
  EXPECT_EQ(generate_fast(params), generate_fast(params));
  const ModelParams other = ModelParams::with_C(20000, 0.8, 0.0, 6);
  EXPECT_NE(generate_fast(params).coords()[0], generate_fast(other).coords()[0]);
}

TEST(GenerateFast, StructuralAndGeometricInvariants) {
  const HrgGraph g = generate_fast(calibrated_params(20000, 0.65, 8.0, 9));
  EXPECT_NO_THROW(g.validate());
  EXPECT_FALSE(g.first_geometric_violation().has_value());
  EXPECT_EQ(g.num_vertices(), 20000u);
}

TEST(GenerateFast, LargeCalibratedGraph) {
  const HrgGraph g = generate_fast(calibrated_params(300000, 0.75, 8.0, 1));
  const double ratio = static_cast<double>(g.num_edges()) / static_cast<double>(g.num_vertices());
  EXPECT_GE(ratio, 3.0);
  EXPECT_LE(ratio, 5.0);
}

TEST(GenerateFast, SmallerAlphaHasLargerMaxDegree) {
  const HrgGraph heavy = generate_fast(calibrated_params(100000, 0.6, 8.0, 4));
  const HrgGraph light = generate_fast(calibrated_params(100000, 0.9, 8.0, 4));
  EXPECT_GT(heavy.max_degree(), light.max_degree());
}

TEST(Calibrate, ExpectedDegreeDecreasesInC) {
  double prev = 1e300;
  for (double C = -4.0; C <= 4.0; C += 0.5) {
    const double d = expected_average_degree(ModelParams::with_C(10000, 0.75, C, 0));
    EXPECT_LT(d, prev) << "C=" << C;
    prev = d;
  }
}

TEST(Calibrate, HitsTarget) {
  for (double alpha : {0.6, 0.75, 0.9}) {
    const double C = calibrate_C(50000, alpha, 8.0);
    const double d = expected_average_degree(ModelParams::with_C(50000, alpha, C, 0));
    EXPECT_NEAR(d, 8.0, 8.0 * 1e-4) << "alpha=" << alpha;
  }
}

TEST(Calibrate, UnreachableTargetThrows) {
  EXPECT_THROW(calibrate_C(1000, 0.75, 5000.0), CalibrationError);
  EXPECT_THROW(calibrate_C(1000, 0.75, 1e-12), CalibrationError);
  EXPECT_THROW(calibrate_C(1000, 0.75, -1.0), std::invalid_argument);
}

TEST(Calibrate, EmpiricalAverageDegreeOfFiveGraphs) {
  const double C = calibrate_C(100000, 0.75, 8.0);
  double sum = 0.0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const HrgGraph g = generate_fast(ModelParams::with_C(100000, 0.75, C, seed));
    sum += 2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(g.num_vertices());
  }
  EXPECT_GE(sum / 5, 7.5);
  EXPECT_LE(sum / 5, 8.5);
}

TEST(LargestComponent, ConnectedGraphIsWhole) {
  const ModelParams params = ModelParams::with_C(4, 0.75, 0.0, 0);
  const std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 2}, {2, 3}};
  const HrgGraph g = HrgGraph::from_edges(params, std::vector<PolarPoint>(4), edges);
  EXPECT_EQ(largest_component(g).vertices, (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(LargestComponent, EdgelessTieGoesToSmallestId) {
  const ModelParams params = ModelParams::with_C(5, 0.75, 0.0, 0);
  const HrgGraph g = HrgGraph::from_edges(params, std::vector<PolarPoint>(5), {});
  const Component c = largest_component(g);
  EXPECT_EQ(c.vertices, std::vector<Vertex>{0});
  EXPECT_EQ(c.index_of[0], 0u);
  EXPECT_EQ(c.index_of[3], kNoVertex);
}

TEST(LargestComponent, MatchesUnionFind) {
  const HrgGraph g = generate_fast(calibrated_params(100000, 0.75, 8.0, 2));
  const auto labels = oracle::component_labels(g);
  std::vector<std::size_t> counts(g.num_vertices(), 0);
  for (Vertex label : labels) ++counts[label];
  const auto best = std::max_element(counts.begin(), counts.end());
  const Component c = largest_component(g);
  ASSERT_EQ(c.size(), *best);
  const Vertex root = static_cast<Vertex>(best - counts.begin());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    EXPECT_EQ(c.contains(v), labels[v] == root);
    if (c.contains(v)) EXPECT_EQ(c.vertices[c.index_of[v]], v);
  }
  EXPECT_GT(c.size(), g.num_vertices() / 2);
}

}  // namespace
}  // namespace hrg

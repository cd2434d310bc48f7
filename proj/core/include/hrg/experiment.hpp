#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hrg/graph.hpp"

namespace hrg {

/// Exponent of the search-space bound n^{2-1/α} + n^{1/(2α)}: max(2 - 1/α, 1/(2α)).
/// Throws std::invalid_argument outside (0.5, 1).
double theoretical_exponent(double alpha);

struct ExperimentConfig {
  std::vector<double> alphas{0.6, 0.7, 0.8, 0.9};
  std::vector<std::uint64_t> ns{25'000, 50'000, 100'000};
  std::size_t graphs_per_cell = 5;
  std::size_t pairs_per_graph = 10'000;
  std::string strategy = "greedy";  // greedy | roundrobin | oracle (ρ = inner_disk_radius)
  double avg_degree = 8.0;
  std::uint64_t seed = 42;
  unsigned threads = 1;
  /// Every `audit_stride`-th pair of a graph is re-checked against a plain BFS.
  std::size_t audit_stride = 100;

  /// Throws std::invalid_argument on an empty grid, α outside (0.5, 1) or zero counts.
  void validate() const;
};

/// One (graph, pair) measurement.
struct ExperimentRecord {
  std::uint64_t n = 0;
  double alpha = 0.0;
  std::uint64_t seed = 0;  // graph seed
  std::uint64_t m = 0;
  Vertex s = 0;
  Vertex t = 0;
  std::string strategy;
  std::uint32_t distance = 0;
  std::uint64_t cost_fwd = 0;
  std::uint64_t cost_bwd = 0;
  std::uint64_t max_side_cost = 0;
};

struct GraphSummary {
  std::size_t alpha_index = 0;
  std::size_t n_index = 0;
  std::size_t graph_index = 0;
  std::uint64_t seed = 0;
  std::uint64_t m = 0;
  std::size_t component_size = 0;
  std::size_t pairs = 0;
  std::size_t audited = 0;
  std::uint64_t max_side_cost = 0;  // max over pairs
  double x = 0.0;                   // ln(max_side_cost) / ln(m)
  bool skipped = false;
};

struct CellSummary {
  std::uint64_t n = 0;
  double alpha = 0.0;
  double C = 0.0;
  std::size_t graphs = 0;  // graphs that contributed
  double m_mean = 0.0;
  double x_measured = 0.0;  // mean over graphs of the per-graph x
  double x_theory = 0.0;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<ExperimentRecord> records;  // sorted by (alpha, n, graph, pair index)
  std::vector<GraphSummary> graphs;
  std::vector<CellSummary> cells;  // alpha-major, then n
  std::vector<std::string> warnings;
};

/// Generates graphs_per_cell calibrated graphs per (α, n) cell, samples distinct
/// start-destination pairs (s != t) from each graph's largest component, and runs the
/// configured strategy on every pair. Graph seeds are derive_seed(seed, {α index,
/// n index, graph index}); pair sampling uses the jumped stream of that seed. Output is
/// independent of the thread count.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Header: n,alpha,seed,m,s,t,strategy,distance,cost_fwd,cost_bwd,max_side_cost
void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);

/// JSON summary: config, per-cell {n, alpha, m_mean, x_measured, x_theory, ...} and
/// per-graph maxima.
void write_summary_json(std::ostream& out, const ExperimentResult& result);

/// alpha,x_theory,x_measured per α (x_measured averaged over that α's cells).
void write_plot_data(std::ostream& out, const ExperimentResult& result);

/// Shortest decimal text that round-trips the double.
std::string format_double(double value);

}  // namespace hrg

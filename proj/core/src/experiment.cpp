#include "hrg/experiment.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "hrg/generate.hpp"
#include "hrg/parallel.hpp"
#include "hrg/rng.hpp"
#include "hrg/search.hpp"

namespace hrg {

double theoretical_exponent(double alpha) {
  if (!(alpha > 0.5 && alpha < 1.0))
    throw std::invalid_argument("theoretical_exponent: alpha must lie strictly inside (0.5, 1)");
  return std::max(2.0 - 1.0 / alpha, 1.0 / (2.0 * alpha));
}

void ExperimentConfig::validate() const {
  if (alphas.empty() || ns.empty()) throw std::invalid_argument("experiment: empty alpha or n grid");
  for (double a : alphas) {
    if (!(a > 0.5 && a < 1.0))
      throw std::invalid_argument("experiment: alpha must lie strictly inside (0.5, 1)");
  }
  for (auto n : ns) {
    if (n < 2) throw std::invalid_argument("experiment: n must be at least 2");
  }
  if (graphs_per_cell == 0 || pairs_per_graph == 0)
    throw std::invalid_argument("experiment: graphs and pairs must be positive");
  if (!(avg_degree > 0.0)) throw std::invalid_argument("experiment: avg_degree must be positive");
  if (audit_stride == 0) throw std::invalid_argument("experiment: audit_stride must be positive");
  parse_strategy(strategy);
}

std::string format_double(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, end);
}

namespace {

struct GraphTask {
  std::size_t alpha_index;
  std::size_t n_index;
  std::size_t graph_index;
};

struct GraphOutput {
  GraphSummary summary;
  std::vector<ExperimentRecord> records;
  std::string warning;
};

std::vector<std::pair<Vertex, Vertex>> sample_pairs(const Component& component, std::size_t count,
                                                    Xoshiro256& rng) {
  const std::uint64_t k = component.size();
  const std::uint64_t ordered = k * (k - 1);
  // Without replacement while rejection stays cheap; plain sampling otherwise.
  const bool distinct = count <= ordered / 2;
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(count);
  while (pairs.size() < count) {
    const std::uint64_t a = rng.below(k);
    const std::uint64_t b = rng.below(k);
    if (a == b) continue;
    if (distinct && !seen.insert(a * k + b).second) continue;
    pairs.emplace_back(component.vertices[a], component.vertices[b]);
  }
  return pairs;
}

GraphOutput run_graph(const ExperimentConfig& config, const GraphTask& task, double C) {
  const double alpha = config.alphas[task.alpha_index];
  const std::uint64_t n = config.ns[task.n_index];
  const std::uint64_t seed = derive_seed(config.seed, {task.alpha_index, task.n_index, task.graph_index});

  GraphOutput out;
  GraphSummary& summary = out.summary;
  summary.alpha_index = task.alpha_index;
  summary.n_index = task.n_index;
  summary.graph_index = task.graph_index;
  summary.seed = seed;

  const HrgGraph graph = generate_fast(ModelParams::with_C(n, alpha, C, seed));
  summary.m = graph.num_edges();
  const Component component = largest_component(graph);
  summary.component_size = component.size();
  if (component.size() < 2) {
    summary.skipped = true;
    std::ostringstream msg;
    msg << "skipping graph (alpha=" << alpha << ", n=" << n << ", graph " << task.graph_index
        << "): largest component has " << component.size() << " vertex";
    out.warning = msg.str();
    return out;
  }

  Xoshiro256 rng(seed);
  rng.jump();
  const auto pairs = sample_pairs(component, config.pairs_per_graph, rng);

  const double rho = inner_disk_radius(std::max<std::uint64_t>(n, 3), alpha);
  const AlternationStrategy strategy = parse_strategy(config.strategy, rho);
  const std::string name = strategy_name(strategy);
  BidirectionalBfs search(graph);

  out.records.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [s, t] = pairs[i];
    const SearchOutcome outcome = search.run(s, t, strategy);
    if (!outcome.reachable())
      throw std::logic_error("experiment: pair inside the largest component reported unreachable");
    if (i % config.audit_stride == 0) {
      if (bfs(graph, s).dist[t] != *outcome.distance)
        throw std::logic_error("experiment: audited distance disagrees with plain BFS");
      ++summary.audited;
    }
    ExperimentRecord rec;
    rec.n = n;
    rec.alpha = alpha;
    rec.seed = seed;
    rec.m = summary.m;
    rec.s = s;
    rec.t = t;
    rec.strategy = name;
    rec.distance = *outcome.distance;
    rec.cost_fwd = outcome.cost_forward;
    rec.cost_bwd = outcome.cost_backward;
    rec.max_side_cost = outcome.max_side_cost();
    summary.max_side_cost = std::max(summary.max_side_cost, rec.max_side_cost);
    out.records.push_back(std::move(rec));
  }
  summary.pairs = pairs.size();
  summary.x = (summary.max_side_cost > 0 && summary.m > 1)
                  ? std::log(static_cast<double>(summary.max_side_cost)) /
                        std::log(static_cast<double>(summary.m))
                  : 0.0;
  return out;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  ExperimentResult result;
  result.config = config;

  const std::size_t num_alphas = config.alphas.size();
  const std::size_t num_ns = config.ns.size();
  const std::size_t num_cells = num_alphas * num_ns;

  std::vector<double> cell_C(num_cells);
  parallel_for(num_cells, config.threads, [&](std::size_t c) {
    cell_C[c] = calibrate_C(config.ns[c % num_ns], config.alphas[c / num_ns], config.avg_degree);
  });

  std::vector<GraphTask> tasks;
  for (std::size_t a = 0; a < num_alphas; ++a)
    for (std::size_t k = 0; k < num_ns; ++k)
      for (std::size_t g = 0; g < config.graphs_per_cell; ++g) tasks.push_back({a, k, g});

  std::vector<GraphOutput> outputs(tasks.size());
  parallel_for(tasks.size(), config.threads, [&](std::size_t i) {
    const GraphTask& task = tasks[i];
    outputs[i] = run_graph(config, task, cell_C[task.alpha_index * num_ns + task.n_index]);
  });

  result.cells.resize(num_cells);
  for (std::size_t c = 0; c < num_cells; ++c) {
    CellSummary& cell = result.cells[c];
    cell.alpha = config.alphas[c / num_ns];
    cell.n = config.ns[c % num_ns];
    cell.C = cell_C[c];
    cell.x_theory = theoretical_exponent(cell.alpha);
  }
  // Tasks are already in (alpha, n, graph) order, so concatenation is deterministic.
  for (auto& output : outputs) {
    const GraphSummary& summary = output.summary;
    if (!output.warning.empty()) result.warnings.push_back(output.warning);
    CellSummary& cell = result.cells[summary.alpha_index * num_ns + summary.n_index];
    if (!summary.skipped) {
      ++cell.graphs;
      cell.m_mean += static_cast<double>(summary.m);
      cell.x_measured += summary.x;
    }
    result.graphs.push_back(summary);
    std::move(output.records.begin(), output.records.end(), std::back_inserter(result.records));
  }
  for (auto& cell : result.cells) {
    if (cell.graphs > 0) {
      cell.m_mean /= static_cast<double>(cell.graphs);
      cell.x_measured /= static_cast<double>(cell.graphs);
    }
  }
  return result;
}

void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << "n,alpha,seed,m,s,t,strategy,distance,cost_fwd,cost_bwd,max_side_cost\n";
  for (const auto& r : records) {
    out << r.n << ',' << format_double(r.alpha) << ',' << r.seed << ',' << r.m << ',' << r.s << ','
        << r.t << ',' << r.strategy << ',' << r.distance << ',' << r.cost_fwd << ',' << r.cost_bwd
        << ',' << r.max_side_cost << '\n';
  }
}

void write_summary_json(std::ostream& out, const ExperimentResult& result) {
  using nlohmann::json;
  const auto& cfg = result.config;
  json doc;
  doc["config"] = {{"alphas", cfg.alphas},
                   {"ns", cfg.ns},
                   {"graphs_per_cell", cfg.graphs_per_cell},
                   {"pairs_per_graph", cfg.pairs_per_graph},
                   {"strategy", cfg.strategy},
                   {"avg_degree", cfg.avg_degree},
                   {"seed", cfg.seed}};
  const std::size_t num_ns = cfg.ns.size();
  json cells = json::array();
  for (std::size_t c = 0; c < result.cells.size(); ++c) {
    const CellSummary& cell = result.cells[c];
    json graphs = json::array();
    for (const auto& g : result.graphs) {
      if (g.alpha_index * num_ns + g.n_index != c) continue;
      graphs.push_back({{"seed", g.seed},
                        {"m", g.m},
                        {"component_size", g.component_size},
                        {"pairs", g.pairs},
                        {"audited", g.audited},
                        {"max_side_cost", g.max_side_cost},
                        {"x", g.x},
                        {"skipped", g.skipped}});
    }
    cells.push_back({{"n", cell.n},
                     {"alpha", cell.alpha},
                     {"C", cell.C},
                     {"m_mean", cell.m_mean},
                     {"x_measured", cell.x_measured},
                     {"x_theory", cell.x_theory},
                     {"graphs", std::move(graphs)}});
  }
  doc["cells"] = std::move(cells);
  doc["warnings"] = result.warnings;
  out << doc.dump(2) << '\n';
}

void write_plot_data(std::ostream& out, const ExperimentResult& result) {
  out << "alpha,x_theory,x_measured\n";
  const std::size_t num_ns = result.config.ns.size();
  for (std::size_t a = 0; a < result.config.alphas.size(); ++a) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < num_ns; ++k) {
      const CellSummary& cell = result.cells[a * num_ns + k];
      if (cell.graphs == 0) continue;
      sum += cell.x_measured;
      ++count;
    }
    const double alpha = result.config.alphas[a];
    out << format_double(alpha) << ',' << format_double(theoretical_exponent(alpha)) << ','
        << (count ? format_double(sum / static_cast<double>(count)) : std::string("nan")) << '\n';
  }
}

}  // namespace hrg

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "hrg/analysis.hpp"
#include "hrg/error.hpp"
#include "hrg/experiment.hpp"
#include "hrg/generate.hpp"
#include "hrg/graph_io.hpp"
#include "hrg/parallel.hpp"
#include "hrg/rng.hpp"
#include "hrg/search.hpp"

namespace hrg::cli {

namespace {

using nlohmann::json;

struct GenerateArgs {
  std::uint64_t n = 0;
  double alpha = 0.0;
  std::optional<double> C;
  std::optional<double> avg_degree;
  std::uint64_t seed = 0;
  std::string out;
  std::string edge_list;
  bool naive = false;
  bool json = false;
};

struct QueryArgs {
  std::string graph;
  Vertex source = 0;
  Vertex target = 0;
  std::string strategy = "greedy";
  std::optional<double> rho;
  bool rho_auto = false;
  bool json = false;
};

struct ValidateArgs {
  std::string graph;
  std::string check;
  bool json = false;
  std::optional<double> rho;
  bool rho_auto = false;
  std::optional<Vertex> source;
  std::size_t starts = 1000;
  std::string mode = "estimate";
  std::uint64_t seed = 0;
  std::uint32_t k_floor = kPowerLawFloor;
  std::optional<double> sector_start;
  std::optional<double> sector_width;
  double r_lo = 0.0;
  std::optional<double> r_hi;
  std::size_t sectors = 100;
  // Scaling mode.
  std::optional<double> alpha;
  std::vector<std::uint64_t> n_list;
  std::size_t seeds = 5;
  double avg_degree = 8.0;
  std::string out;
  std::string summary;
};

struct ExperimentArgs {
  ExperimentConfig config;
  std::string out;
  std::string summary;
  std::string plot_data;
};

/// Parsed command line: the chosen subcommand plus its flags.
struct RunConfig {
  std::optional<unsigned> threads;
  int verbosity = 0;
  bool quiet = false;
  GenerateArgs generate;
  QueryArgs query;
  ValidateArgs validate;
  ExperimentArgs experiment;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  return file;
}

json graph_json(const HrgGraph& graph) {
  const ModelParams& p = graph.params();
  return {{"n", graph.num_vertices()}, {"m", graph.num_edges()}, {"alpha", p.alpha},
          {"R", p.R},                  {"C", p.C()},             {"seed", p.seed}};
}

const char* side_name(Side side) { return side == Side::forward ? "forward" : "backward"; }

json outcome_json(const QueryArgs& args, const AlternationStrategy& strategy,
                  const SearchOutcome& outcome) {
  json doc;
  doc["source"] = args.source;
  doc["target"] = args.target;
  doc["strategy"] = strategy_name(strategy);
  if (const auto* oracle = std::get_if<GeometricOracle>(&strategy)) doc["rho"] = oracle->rho;
  doc["reachable"] = outcome.reachable();
  doc["distance"] = outcome.distance ? json(*outcome.distance) : json(nullptr);
  doc["path"] = outcome.path;
  doc["meeting_vertex"] = outcome.meeting_vertex ? json(*outcome.meeting_vertex) : json(nullptr);
  doc["cost_forward"] = outcome.cost_forward;
  doc["cost_backward"] = outcome.cost_backward;
  doc["total_cost"] = outcome.total_cost();
  doc["max_side_cost"] = outcome.max_side_cost();
  doc["layers_forward"] = outcome.layers_forward();
  doc["layers_backward"] = outcome.layers_backward();
  doc["layer_costs_forward"] = outcome.layer_costs_forward;
  doc["layer_costs_backward"] = outcome.layer_costs_backward;
  json schedule = json::array();
  for (Side side : outcome.schedule) schedule.push_back(side_name(side));
  doc["schedule"] = std::move(schedule);
  if (outcome.inner_layer_forward) doc["inner_layer_forward"] = *outcome.inner_layer_forward;
  if (outcome.inner_layer_backward) doc["inner_layer_backward"] = *outcome.inner_layer_backward;
  return doc;
}

double resolve_rho(const HrgGraph& graph, std::optional<double> rho, bool rho_auto) {
  if (rho) return *rho;
  if (rho_auto) return inner_disk_radius(graph.num_vertices(), graph.params().alpha);
  throw UsageError("this check needs --rho or --rho-auto");
}

// ---------------------------------------------------------------------------

int cmd_generate(const RunConfig& cfg, std::ostream& out, spdlog::logger& log) {
  const GenerateArgs& a = cfg.generate;
  ModelParams params;
  if (a.C) {
    params = ModelParams::with_C(a.n, a.alpha, *a.C, a.seed);
  } else {
    params = calibrated_params(a.n, a.alpha, *a.avg_degree, a.seed);
    log.info("calibrated C = {} for average degree {}", params.C(), *a.avg_degree);
  }
  const HrgGraph graph = a.naive ? generate_naive(params) : generate_fast(params);
  write_graph(a.out, graph);
  if (!a.edge_list.empty()) write_edge_list(a.edge_list, graph);
  log.info("wrote {} vertices, {} edges to {}", graph.num_vertices(), graph.num_edges(), a.out);

  if (a.json) {
    json doc = graph_json(graph);
    doc["builder"] = a.naive ? "naive" : "fast";
    doc["max_degree"] = graph.max_degree();
    doc["avg_degree"] = graph.num_vertices() ? 2.0 * static_cast<double>(graph.num_edges()) /
                                                   static_cast<double>(graph.num_vertices())
                                             : 0.0;
    out << doc.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_query(const RunConfig& cfg, std::ostream& out, spdlog::logger&) {
  const QueryArgs& a = cfg.query;
  const HrgGraph graph = read_graph(a.graph);
  double rho = 0.0;
  if (a.strategy == "oracle") rho = resolve_rho(graph, a.rho, a.rho_auto);
  const AlternationStrategy strategy = parse_strategy(a.strategy, rho);
  const SearchOutcome outcome = bidirectional_bfs(graph, a.source, a.target, strategy);

  if (a.json) {
    out << outcome_json(a, strategy, outcome).dump(2) << '\n';
  } else if (outcome.reachable()) {
    out << "distance " << *outcome.distance << "\npath";
    for (Vertex v : outcome.path) out << ' ' << v;
    out << "\ncost_forward " << outcome.cost_forward << "\ncost_backward "
        << outcome.cost_backward << '\n';
  } else {
    out << "unreachable\ncost_forward " << outcome.cost_forward << "\ncost_backward "
        << outcome.cost_backward << '\n';
  }
  return kExitOk;
}

json check_powerlaw(const ValidateArgs& a, const HrgGraph& graph) {
  const auto degrees = graph.degrees();
  const PowerLawFit fit = fit_power_law(degrees, a.k_floor);
  return {{"beta", fit.beta},
          {"expected_beta", 2.0 * graph.params().alpha + 1.0},
          {"k_floor", fit.k_floor},
          {"tail_count", fit.tail_count}};
}

json check_maxdeg(const HrgGraph& graph) {
  const double n = static_cast<double>(graph.num_vertices());
  const double scale = std::pow(n, 1.0 / (2.0 * graph.params().alpha));
  return {{"max_degree", graph.max_degree()},
          {"reference", scale},
          {"ratio", static_cast<double>(graph.max_degree()) / scale}};
}

json check_sector(const ValidateArgs& a, const HrgGraph& graph) {
  const std::uint64_t n = graph.num_vertices();
  const double width = a.sector_width ? *a.sector_width : sector_width(n, graph.params().alpha);
  json result;
  result["width"] = width;
  if (a.sector_start) {
    SectorSpec sector{*a.sector_start, width, a.r_lo,
                      a.r_hi.value_or(std::numeric_limits<double>::infinity())};
    sector.validate();
    result["start_angle"] = sector.start_angle;
    result["r_lo"] = sector.r_lo;
    if (a.r_hi) result["r_hi"] = *a.r_hi;
    result["degree_sum"] = sector_degree_sum(graph, sector);
  } else {
    result["sectors"] = a.sectors;
    result["seed"] = a.seed;
    result["max_degree_sum"] = max_sector_degree_sum(graph, width, a.sectors, a.seed);
  }
  return result;
}

const char* status_name(InnerDiskStatus status) {
  switch (status) {
    case InnerDiskStatus::witness: return "witness";
    case InnerDiskStatus::vacuous: return "vacuous";
    case InnerDiskStatus::no_candidate: return "no_candidate";
    case InnerDiskStatus::verification_failed: return "verification_failed";
  }
  return "unknown";
}

json check_innerdisk(const ValidateArgs& a, const HrgGraph& graph) {
  const double rho = resolve_rho(graph, a.rho, a.rho_auto);
  const InnerDiskResult r = inner_disk_check(graph, rho);
  return {{"rho", rho},
          {"status", status_name(r.status)},
          {"witness", r.witness ? json(*r.witness) : json(nullptr)},
          {"missed", r.missed ? json(*r.missed) : json(nullptr)},
          {"inner_vertices", r.inner_vertices}};
}

json check_width(const ValidateArgs& a, const HrgGraph& graph) {
  const double rho = resolve_rho(graph, a.rho, a.rho_auto);
  const std::size_t n = graph.num_vertices();
  if (n == 0) throw std::invalid_argument("width: empty graph");
  std::vector<Vertex> starts;
  if (a.source) {
    starts.push_back(*a.source);
  } else {
    Xoshiro256 rng(a.seed);
    for (std::size_t i = 0; i < a.starts; ++i) starts.push_back(static_cast<Vertex>(rng.below(n)));
  }
  std::vector<double> widths;
  std::size_t inside = 0;
  for (Vertex s : starts) {
    const PhaseOneWidth w = phase_one_width(graph, s, rho);
    widths.push_back(w.width);
    inside += w.source_in_inner_disk ? 1 : 0;
  }
  std::vector<double> sorted = widths;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted.size() % 2 ? sorted[sorted.size() / 2]
                                          : 0.5 * (sorted[sorted.size() / 2 - 1] +
                                                   sorted[sorted.size() / 2]);
  const double alpha = graph.params().alpha;
  const double ln_n = std::log(static_cast<double>(n));
  const double reference =
      std::pow(static_cast<double>(n), 1.0 - 1.0 / alpha) * std::pow(ln_n, 1.0 / alpha);
  return {{"rho", rho},
          {"starts", starts.size()},
          {"source_in_inner_disk", inside},
          {"median_width", median},
          {"max_width", sorted.back()},
          {"reference", reference},
          {"median_ratio", median / reference}};
}

json check_diameter(const ValidateArgs& a, const HrgGraph& graph) {
  DiameterMode mode;
  if (a.mode == "exact") {
    mode = DiameterMode::exact;
  } else if (a.mode == "estimate") {
    mode = DiameterMode::estimate;
  } else {
    throw UsageError("--mode must be exact or estimate");
  }
  const std::uint32_t d = diameter(graph, mode, a.seed);
  const double ln_n = std::log(std::max<double>(2.0, static_cast<double>(graph.num_vertices())));
  return {{"mode", a.mode}, {"diameter", d}, {"ln_n_squared", ln_n * ln_n}};
}

int validate_scaling(const RunConfig& cfg, std::ostream& out, spdlog::logger& log) {
  const ValidateArgs& a = cfg.validate;
  if (!a.alpha) throw UsageError("scaling mode needs --alpha");
  const GraphFactory factory = hrg_factory(*a.alpha, a.avg_degree);
  ScalingRun run;
  std::string metric;
  if (a.check == "maxdeg") {
    metric = "max_degree";
    run = max_degree_scaling(factory, a.n_list, a.seeds, a.seed);
  } else if (a.check == "sector") {
    metric = "max_sector_degree_sum";
    run = sector_sum_scaling(factory, *a.alpha, a.n_list, a.seeds, a.seed, a.sectors);
  } else {
    throw UsageError("--n-list is only supported by --check maxdeg and --check sector");
  }
  log.info("{} scaling exponent {} (r^2 = {})", metric, run.fit.exponent, run.fit.r_squared);

  std::ofstream file;
  if (!a.out.empty()) file = open_output(a.out);
  std::ostream& csv = a.out.empty() ? out : file;
  csv << "n,alpha,seed,metric,value\n";
  for (const auto& s : run.samples) {
    csv << s.n << ',' << format_double(*a.alpha) << ',' << s.seed << ',' << metric << ','
        << format_double(s.value) << '\n';
  }

  if (!a.summary.empty()) {
    json points = json::array();
    for (const auto& [n, value] : run.fit.points) points.push_back({{"n", n}, {"value", value}});
    const double reference = a.check == "maxdeg" ? 1.0 / (2.0 * *a.alpha)
                                                 : theoretical_exponent(*a.alpha);
    json doc = {{"check", a.check},     {"metric", metric},
                {"alpha", *a.alpha},    {"avg_degree", a.avg_degree},
                {"seeds_per_n", a.seeds}, {"seed", a.seed},
                {"points", points},     {"exponent", run.fit.exponent},
                {"intercept", run.fit.intercept}, {"r_squared", run.fit.r_squared},
                {"reference_exponent", reference}};
    open_output(a.summary) << doc.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out, spdlog::logger& log) {
  const ValidateArgs& a = cfg.validate;
  if (!a.n_list.empty()) {
    if (!a.graph.empty()) throw UsageError("--graph and --n-list are mutually exclusive");
    return validate_scaling(cfg, out, log);
  }
  if (a.graph.empty()) throw UsageError("--graph is required unless --n-list is given");

  const HrgGraph graph = read_graph(a.graph);
  json result;
  if (a.check == "powerlaw") {
    result = check_powerlaw(a, graph);
  } else if (a.check == "maxdeg") {
    result = check_maxdeg(graph);
  } else if (a.check == "sector") {
    result = check_sector(a, graph);
  } else if (a.check == "innerdisk") {
    result = check_innerdisk(a, graph);
  } else if (a.check == "width") {
    result = check_width(a, graph);
  } else {
    result = check_diameter(a, graph);
  }

  if (a.json) {
    json doc = {{"check", a.check}, {"graph", graph_json(graph)}, {"result", result}};
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& [key, value] : result.items()) out << key << ' ' << value.dump() << '\n';
  }
  return kExitOk;
}

int cmd_experiment(const RunConfig& cfg, std::ostream&, spdlog::logger& log) {
  ExperimentConfig config = cfg.experiment.config;
  config.threads = resolve_threads(cfg.threads);
  log.info("experiment: {} alphas x {} sizes x {} graphs, {} pairs each, {} thread(s)",
           config.alphas.size(), config.ns.size(), config.graphs_per_cell,
           config.pairs_per_graph, config.threads);
  const ExperimentResult result = run_experiment(config);
  for (const auto& warning : result.warnings) log.warn("{}", warning);

  {
    std::ofstream csv = open_output(cfg.experiment.out);
    write_records_csv(csv, result.records);
  }
  if (!cfg.experiment.summary.empty()) {
    std::ofstream summary = open_output(cfg.experiment.summary);
    write_summary_json(summary, result);
  }
  if (!cfg.experiment.plot_data.empty()) {
    std::ofstream plot = open_output(cfg.experiment.plot_data);
    write_plot_data(plot, result);
  }
  for (const auto& cell : result.cells) {
    log.info("alpha={} n={} x_measured={:.4f} x_theory={:.4f}", cell.alpha, cell.n,
             cell.x_measured, cell.x_theory);
  }
  return kExitOk;
}

void add_rho_options(CLI::App* cmd, std::optional<double>& rho, bool& rho_auto) {
  auto* rho_opt = cmd->add_option("--rho", rho, "Inner-disk radius");
  auto* auto_opt =
      cmd->add_flag("--rho-auto", rho_auto, "Use (ln n - ln ln n) / alpha as the inner-disk radius");
  rho_opt->excludes(auto_opt);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Hyperbolic random graphs and bidirectional BFS", "hrg"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  app.add_option("--threads", cfg.threads, "Worker threads (overrides HRG_THREADS)")
      ->check(CLI::PositiveNumber);
  app.add_flag("-v,--verbose", cfg.verbosity, "More diagnostics; repeat for debug output");
  app.add_flag("-q,--quiet", cfg.quiet, "Only report errors");

  // generate
  auto* gen = app.add_subcommand("generate", "Sample a hyperbolic random graph");
  GenerateArgs& g = cfg.generate;
  gen->add_option("--n", g.n, "Number of vertices")->required()->check(CLI::PositiveNumber);
  gen->add_option("--alpha", g.alpha, "Radial dispersion, strictly inside (0.5, 1)")->required();
  auto* radius = gen->add_option_group("radius", "Exactly one of --C or --avg-degree");
  radius->add_option("--C", g.C, "Radius offset: R = 2 ln n + C");
  radius->add_option("--avg-degree", g.avg_degree, "Calibrate C to this expected average degree");
  radius->require_option(1);
  gen->add_option("--seed", g.seed, "Master seed");
  gen->add_option("--out", g.out, "Binary graph output")->required();
  gen->add_option("--edge-list", g.edge_list, "Also write a text edge list");
  gen->add_flag("--naive", g.naive, "Use the quadratic reference builder");
  gen->add_flag("--json", g.json, "Print a JSON summary to standard output");

  // query
  auto* query = app.add_subcommand("query", "Shortest path by bidirectional BFS");
  QueryArgs& q = cfg.query;
  query->add_option("--graph", q.graph, "Binary graph file")->required();
  query->add_option("--source", q.source, "Start vertex")->required();
  query->add_option("--target", q.target, "Destination vertex")->required();
  query->add_option("--strategy", q.strategy, "Alternation strategy")
      ->check(CLI::IsMember({"greedy", "roundrobin", "oracle"}));
  add_rho_options(query, q.rho, q.rho_auto);
  query->add_flag("--json", q.json, "Emit the search outcome as JSON");

  // validate
  auto* val = app.add_subcommand("validate", "Structural checks on generated graphs");
  ValidateArgs& v = cfg.validate;
  val->add_option("--graph", v.graph, "Binary graph file");
  val->add_option("--check", v.check, "Check to run")
      ->required()
      ->check(CLI::IsMember({"powerlaw", "maxdeg", "sector", "innerdisk", "width", "diameter"}));
  val->add_flag("--json", v.json, "Emit the result as JSON");
  add_rho_options(val, v.rho, v.rho_auto);
  val->add_option("--source", v.source, "width: single start vertex");
  val->add_option("--starts", v.starts, "width: random start vertices when --source is absent")
      ->check(CLI::PositiveNumber);
  val->add_option("--mode", v.mode, "diameter: exact or estimate")
      ->check(CLI::IsMember({"exact", "estimate"}));
  val->add_option("--seed", v.seed, "Seed for random sectors, starts and sweeps");
  val->add_option("--k-floor", v.k_floor, "powerlaw: smallest degree in the fitted tail")
      ->check(CLI::PositiveNumber);
  val->add_option("--sector-start", v.sector_start, "sector: start angle of a single sector");
  val->add_option("--sector-width", v.sector_width, "sector: angular width");
  val->add_option("--r-lo", v.r_lo, "sector: inner radius of the band");
  val->add_option("--r-hi", v.r_hi, "sector: outer radius of the band");
  val->add_option("--sectors", v.sectors, "sector: random sectors per graph")
      ->check(CLI::PositiveNumber);
  val->add_option("--alpha", v.alpha, "Scaling mode: alpha of the generated graphs");
  val->add_option("--n-list", v.n_list, "Scaling mode: comma-separated graph sizes")
      ->delimiter(',');
  val->add_option("--seeds", v.seeds, "Scaling mode: graphs per size")->check(CLI::PositiveNumber);
  val->add_option("--avg-degree", v.avg_degree, "Scaling mode: calibrated average degree");
  val->add_option("--out", v.out, "Scaling mode: CSV output (default: standard output)");
  val->add_option("--summary", v.summary, "Scaling mode: JSON fit summary");

  // experiment
  auto* exp = app.add_subcommand("experiment", "Search-space scaling experiment");
  ExperimentArgs& e = cfg.experiment;
  exp->add_option("--alphas", e.config.alphas, "Comma-separated alpha grid")->delimiter(',');
  exp->add_option("--ns", e.config.ns, "Comma-separated graph sizes")->delimiter(',');
  exp->add_option("--graphs", e.config.graphs_per_cell, "Graphs per (alpha, n) cell");
  exp->add_option("--pairs", e.config.pairs_per_graph, "Start-destination pairs per graph");
  exp->add_option("--strategy", e.config.strategy, "Alternation strategy")
      ->check(CLI::IsMember({"greedy", "roundrobin", "oracle"}));
  exp->add_option("--avg-degree", e.config.avg_degree, "Calibrated average degree");
  exp->add_option("--seed", e.config.seed, "Master seed");
  exp->add_option("--out", e.out, "Per-pair CSV output")->required();
  exp->add_option("--summary", e.summary, "JSON summary output");
  exp->add_option("--plot-data", e.plot_data, "CSV of alpha,x_theory,x_measured");

  auto sink = std::make_shared<spdlog::sinks::ostream_sink_st>(err);
  spdlog::logger log("hrg", sink);
  log.set_pattern("hrg: %l: %v");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex, out, err);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex, out, err);
    return kExitUsage;
  }

  if (cfg.quiet) {
    log.set_level(spdlog::level::err);
  } else {
    log.set_level(cfg.verbosity >= 2 ? spdlog::level::debug
                  : cfg.verbosity == 1 ? spdlog::level::info
                                       : spdlog::level::warn);
  }

  try {
    if (gen->parsed()) return cmd_generate(cfg, out, log);
    if (query->parsed()) return cmd_query(cfg, out, log);
    if (val->parsed()) return cmd_validate(cfg, out, log);
    return cmd_experiment(cfg, out, log);
  } catch (const UsageError& ex) {
    log.error("{}", ex.what());
    err << app.help();
    return kExitUsage;
  } catch (const FormatError& ex) {
    log.error("malformed graph file, field '{}': {}", ex.field(), ex.what());
    return kExitRuntime;
  } catch (const std::exception& ex) {
    log.error("{}", ex.what());
    return kExitRuntime;
  }
}

}  // namespace hrg::cli

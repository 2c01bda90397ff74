#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "gtpmm/baselines.hpp"
#include "gtpmm/bench.hpp"
#include "gtpmm/document.hpp"
#include "gtpmm/errors.hpp"
#include "gtpmm/ingest.hpp"
#include "gtpmm/planner.hpp"
#include "gtpmm/timetable.hpp"

namespace fs = std::filesystem;
using namespace gtpmm;

namespace {

constexpr int kExitError = 1;
constexpr int kExitInfeasible = 3;

struct NetworkArgs {
  std::string edges;
  std::string pois;
  std::string fares;
  std::string gtfs;
  std::size_t synthetic = 0;
  std::uint64_t network_seed = 7;
  std::string fare_strategy = "low";
  std::uint64_t seed = 1;
};

void add_network_options(CLI::App* cmd, NetworkArgs& a) {
  auto* edges = cmd->add_option("--edges", a.edges, "Edge-list CSV")
                    ->check(CLI::ExistingFile);
  cmd->add_option("--pois", a.pois, "PoI CSV for the edge list")
      ->check(CLI::ExistingFile)
      ->needs(edges);
  cmd->add_option("--fares", a.fares, "Fare config CSV (default: Swiss table)")
      ->check(CLI::ExistingFile);
  auto* gtfs = cmd->add_option("--gtfs", a.gtfs, "GTFS feed directory")
                   ->check(CLI::ExistingDirectory);
  auto* synth = cmd->add_option("--synthetic", a.synthetic,
                                "Random city network with N PoIs");
  cmd->add_option("--network-seed", a.network_seed,
                  "Seed for --synthetic")
      ->capture_default_str();
  edges->excludes(gtfs)->excludes(synth);
  gtfs->excludes(synth);
  cmd->add_option("--fare-strategy", a.fare_strategy,
                  "Fare resolution: low, mid, high, seeded")
      ->check(CLI::IsMember({"low", "mid", "high", "seeded", "seeded-uniform"}))
      ->capture_default_str();
  cmd->add_option("--seed", a.seed, "Seed for fares and randomized methods")
      ->capture_default_str();
}

MultiModalNetwork load_network(const NetworkArgs& a) {
  const FareStrategy strategy = parse_fare_strategy(a.fare_strategy);
  if (a.synthetic) {
    spdlog::info("generating synthetic network with {} PoIs", a.synthetic);
    return synthetic_network({.poi_count = a.synthetic,
                              .seed = a.network_seed,
                              .fare_strategy = strategy});
  }
  const FareConfig config =
      a.fares.empty() ? switzerland_fares() : load_fare_config(a.fares);
  const FareTable fares = resolve_fares(config, strategy, a.seed);
  if (!a.gtfs.empty()) {
    GtfsStats stats;
    auto net = load_gtfs(a.gtfs, fares, &stats);
    spdlog::info("GTFS: {} stops, {} edges from {} hops", net.poi_count(),
                 net.edge_count(), stats.hop_count);
    return net;
  }
  if (a.edges.empty())
    throw ConfigError("no network given: use --edges, --gtfs or --synthetic");
  auto net = load_edge_list(a.edges, fares,
                            a.pois.empty() ? std::nullopt
                                           : std::optional<fs::path>(a.pois));
  spdlog::info("edge list: {} PoIs, {} edges", net.poi_count(),
               net.edge_count());
  return net;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

std::optional<Minutes> parse_clock(const std::string& text) {
  const auto colons = std::count(text.begin(), text.end(), ':');
  if (colons == 1) return parse_gtfs_time(text + ":00");
  if (colons == 2) return parse_gtfs_time(text);
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size() && v >= 0) return v;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path, 0, e.what());
  }
}

void configure_logging() {
  auto logger = spdlog::stderr_color_mt("gtpmm");
  logger->set_pattern("[%l] %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("GTPMM_LOG")) {
    const auto level = spdlog::level::from_str(env);
    if (level == spdlog::level::off && std::string(env) != "off")
      spdlog::warn("GTPMM_LOG='{}' is not a log level; using warn", env);
    else
      spdlog::set_level(level);
  }
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();
  CLI::App app{"Group trip planning over multimodal transit networks"};
  app.require_subcommand(1);

  // plan
  NetworkArgs plan_net;
  std::string plan_query, plan_method = "ojpa", plan_sharing = "per-person",
                          plan_out;
  auto* plan_cmd = app.add_subcommand("plan", "Plan a group journey");
  add_network_options(plan_cmd, plan_net);
  plan_cmd->add_option("--query", plan_query, "Query JSON")
      ->required()
      ->check(CLI::ExistingFile);
  plan_cmd->add_option("--method", plan_method, "ojpa, rprm, rpcm or nncm")
      ->check(CLI::IsMember({"ojpa", "rprm", "rpcm", "nncm"}))
      ->capture_default_str();
  plan_cmd->add_option("--sharing", plan_sharing, "per-person or shared")
      ->check(CLI::IsMember({"per-person", "shared"}))
      ->capture_default_str();
  plan_cmd->add_option("--out", plan_out, "Plan JSON output (default stdout)");

  // verify
  NetworkArgs verify_net;
  std::string verify_query, verify_timetable, verify_start = "00:00",
                                              verify_method = "ojpa",
                                              verify_sharing = "per-person";
  auto* verify_cmd =
      app.add_subcommand("verify", "Check a plan against a timetable");
  add_network_options(verify_cmd, verify_net);
  verify_cmd->add_option("--query", verify_query, "Query JSON")
      ->required()
      ->check(CLI::ExistingFile);
  verify_cmd->add_option("--timetable", verify_timetable, "Timetable JSON")
      ->required()
      ->check(CLI::ExistingFile);
  verify_cmd->add_option("--start", verify_start, "Departure time HH:MM")
      ->capture_default_str();
  verify_cmd->add_option("--method", verify_method, "ojpa, rprm, rpcm or nncm")
      ->check(CLI::IsMember({"ojpa", "rprm", "rpcm", "nncm"}))
      ->capture_default_str();
  verify_cmd->add_option("--sharing", verify_sharing, "per-person or shared")
      ->check(CLI::IsMember({"per-person", "shared"}))
      ->capture_default_str();

  // bench
  NetworkArgs bench_net;
  ExperimentConfig bench_cfg;
  std::vector<std::string> bench_methods{"ojpa", "rprm", "rpcm", "nncm"};
  std::string bench_sharing = "per-person", bench_out, bench_summary;
  bool bench_unequal = false;
  auto* bench_cmd = app.add_subcommand("bench", "Run the comparison grid");
  add_network_options(bench_cmd, bench_net);
  bench_cmd->add_option("--agents", bench_cfg.agent_counts, "Agent counts")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--k", bench_cfg.category_counts, "Category counts")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd
      ->add_option("--pois-per-category", bench_cfg.pois_per_category,
                   "PoIs per category")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--runs", bench_cfg.runs, "Runs per cell")
      ->capture_default_str();
  bench_cmd->add_option("--method", bench_methods, "Methods to compare")
      ->delimiter(',')
      ->check(CLI::IsMember({"ojpa", "rprm", "rpcm", "nncm"}))
      ->capture_default_str();
  bench_cmd->add_option("--sharing", bench_sharing, "per-person or shared")
      ->check(CLI::IsMember({"per-person", "shared"}))
      ->capture_default_str();
  bench_cmd->add_flag("--unequal-categories", bench_unequal,
                      "Draw category sizes from [1, 2p-1]");
  bench_cmd->add_option("--out", bench_out, "Per-run CSV (default stdout)");
  bench_cmd->add_option("--summary", bench_summary, "Per-cell mean CSV");

  // ingest
  NetworkArgs ingest_net;
  std::string ingest_out, ingest_categorize = "none";
  int ingest_k = 10;
  auto* ingest_cmd = app.add_subcommand(
      "ingest", "Convert a network to edge-list, PoI and fare CSVs");
  add_network_options(ingest_cmd, ingest_net);
  ingest_cmd->add_option("--out", ingest_out, "Output directory")->required();
  ingest_cmd
      ->add_option("--categorize", ingest_categorize,
                   "none, keyword, random or round-robin")
      ->check(CLI::IsMember({"none", "keyword", "random", "round-robin"}))
      ->capture_default_str();
  ingest_cmd->add_option("--k", ingest_k, "Category count")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*plan_cmd) {
      const auto net = load_network(plan_net);
      const auto inst = load_query(plan_query, net);
      const Method method = parse_method(plan_method);
      const auto p = solve(method, net, inst, parse_sharing(plan_sharing),
                           plan_net.seed);
      spdlog::info("{}: total cost {} cents", plan_method, p.total_cost.value());
      write_text(plan_out, plan_to_json(p, net, plan_method).dump(2) + "\n");
    } else if (*verify_cmd) {
      const auto net = load_network(verify_net);
      const auto inst = load_query(verify_query, net);
      const auto start = parse_clock(verify_start);
      if (!start) throw ConfigError("invalid --start '" + verify_start + "'");
      const auto timetable =
          timetable_from_json(load_json(verify_timetable), net);
      const auto p = solve(parse_method(verify_method), net, inst,
                           parse_sharing(verify_sharing), verify_net.seed);
      const auto report = validate_timing(net, p, timetable, *start);
      if (!report.feasible) {
        std::cout << "infeasible: " << report.message << '\n';
        return kExitInfeasible;
      }
      std::cout << fmt::format("feasible: {} agents, total cost {}\n",
                               p.agent_count(), p.total_cost.to_major_string());
    } else if (*bench_cmd) {
      NetworkArgs args = bench_net;
      if (args.edges.empty() && args.gtfs.empty() && !args.synthetic)
        args.synthetic = 200;
      const auto net = load_network(args);
      bench_cfg.seed = bench_net.seed;
      bench_cfg.sharing = parse_sharing(bench_sharing);
      bench_cfg.fare_strategy = parse_fare_strategy(args.fare_strategy);
      bench_cfg.equal_category_sizes = !bench_unequal;
      bench_cfg.methods.clear();
      for (const auto& m : bench_methods)
        bench_cfg.methods.push_back(parse_method(m));
      const auto rows = run_experiment(net, bench_cfg);
      spdlog::info("bench: {} rows", rows.size());
      if (bench_out.empty() || bench_out == "-")
        emit_csv(rows, net.fares(), std::cout);
      else
        emit_csv(rows, net.fares(), fs::path(bench_out));
      if (!bench_summary.empty()) {
        std::ofstream out(bench_summary, std::ios::binary);
        if (!out) throw Error("cannot write '" + bench_summary + "'");
        emit_summary(summarize(rows), net.fares(), out);
      }
    } else if (*ingest_cmd) {
      auto net = load_network(ingest_net);
      if (ingest_categorize != "none") {
        CategoryConfig cfg{ingest_k, RoundRobin{}};
        if (ingest_categorize == "keyword")
          cfg.strategy = default_keyword_categories();
        else if (ingest_categorize == "random")
          cfg.strategy = SeededRandom{ingest_net.seed};
        net = categorize(net, cfg).network;
      }
      fs::create_directories(ingest_out);
      const fs::path dir(ingest_out);
      std::ofstream edges(dir / "edges.csv", std::ios::binary);
      std::ofstream pois(dir / "pois.csv", std::ios::binary);
      std::ofstream fares(dir / "fares.csv", std::ios::binary);
      if (!edges || !pois || !fares)
        throw Error("cannot write into '" + ingest_out + "'");
      write_edge_list(net, edges);
      write_pois(net, pois);
      write_fare_table(net.fares(), fares);
      std::cout << fmt::format("wrote {} PoIs and {} edges to {}\n",
                               net.poi_count(), net.edge_count(), ingest_out);
    }
  } catch (const InfeasibleError& e) {
    spdlog::error("{}", e.what());
    return kExitInfeasible;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitError;
  }
  return 0;
}

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "gtpmm/baselines.hpp"
#include "gtpmm/ingest.hpp"
#include "gtpmm/network.hpp"
#include "gtpmm/planner.hpp"

namespace gtpmm {

struct ExperimentConfig {
  std::vector<std::size_t> agent_counts{5, 10, 20, 50, 100};
  std::vector<std::size_t> category_counts{10};
  std::vector<std::size_t> pois_per_category{5, 10, 15, 20};
  std::size_t runs = 3;
  std::uint64_t seed = 1;
  std::vector<Method> methods{std::begin(kAllMethods), std::end(kAllMethods)};
  SharingMode sharing = SharingMode::PerPersonIntermediate;
  FareStrategy fare_strategy = FareStrategy::Low;
  // When false, category sizes are drawn uniformly from [1, 2p-1].
  bool equal_category_sizes = true;

  // Throws PreconditionError on zero counts or no methods.
  void validate() const;
};

// Per-mode edge traversals and their cost, weighted by how many agents ride
// each leg. Indexed by ModeId.
struct UsageStats {
  std::vector<std::int64_t> legs;
  std::vector<Money> cost;

  std::int64_t total_legs() const;
  Money total_cost() const;
};

// Source and destination legs count once; common legs count once per agent
// under PerPersonIntermediate and once under SharedIntermediate.
UsageStats medium_usage(const MultiModalNetwork& net, const JourneyPlan& plan);

struct ResultRow {
  Method method = Method::Ojpa;
  std::size_t agents = 0;
  std::size_t k = 0;
  std::size_t pois_per_category = 0;
  std::size_t run = 0;
  Money total_cost;
  double wall_time_ms = 0;
  UsageStats usage;
};

// The query drawn for one (k, p, run) cell with `agents` agents. Agents are a
// prefix of one fixed draw, so growing the agent count only appends agents.
QueryInstance draw_instance(const MultiModalNetwork& net,
                            const ExperimentConfig& cfg, std::size_t agents,
                            std::size_t k, std::size_t p, std::size_t run);

// Every (agents, k, p, run, method) cell in that nesting order. Cost and
// usage columns are a pure function of (net, cfg).
std::vector<ResultRow> run_experiment(const MultiModalNetwork& net,
                                      const ExperimentConfig& cfg);

std::vector<std::string> csv_header(const FareTable& fares);
void emit_csv(const std::vector<ResultRow>& rows, const FareTable& fares,
              std::ostream& out);
// Throws Error if the file cannot be written.
void emit_csv(const std::vector<ResultRow>& rows, const FareTable& fares,
              const std::filesystem::path& path);

struct SummaryRow {
  Method method = Method::Ojpa;
  std::size_t agents = 0;
  std::size_t k = 0;
  std::size_t pois_per_category = 0;
  std::size_t runs = 0;
  double mean_cost_cents = 0;
  double mean_wall_time_ms = 0;
  std::vector<double> mean_legs;
};

// Mean over runs per (method, agents, k, p), in first-seen order.
std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows);
void emit_summary(const std::vector<SummaryRow>& rows, const FareTable& fares,
                  std::ostream& out);

struct SyntheticConfig {
  std::size_t poi_count = 200;
  std::uint64_t seed = 7;
  // Each PoI links to this many nearest neighbours.
  std::size_t neighbours = 3;
  // Each link carries between 1 and this many distinct modes.
  std::size_t max_modes_per_link = 3;
  double extent_m = 8000.0;
  double speed_m_per_min = 400.0;
  FareStrategy fare_strategy = FareStrategy::Low;
};

// Random geometric city network priced with the Swiss fare bounds; joined
// into one component with repair edges.
MultiModalNetwork synthetic_network(const SyntheticConfig& cfg);

}  // namespace gtpmm

#include "gtpmm/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <tuple>

#include "gtpmm/csv.hpp"
#include "gtpmm/errors.hpp"
#include "gtpmm/rng.hpp"

namespace gtpmm {

void ExperimentConfig::validate() const {
  const auto positive = [](const std::vector<std::size_t>& xs,
                           const char* what) {
    if (xs.empty()) throw PreconditionError(std::string(what) + " is empty");
    for (auto x : xs)
      if (x < 1) throw PreconditionError(std::string(what) + " must be >= 1");
  };
  positive(agent_counts, "agent_counts");
  positive(category_counts, "category_counts");
  positive(pois_per_category, "pois_per_category");
  if (runs < 1) throw PreconditionError("runs must be >= 1");
  if (methods.empty()) throw PreconditionError("no methods selected");
}

std::int64_t UsageStats::total_legs() const {
  return std::accumulate(legs.begin(), legs.end(), std::int64_t{0});
}

Money UsageStats::total_cost() const {
  return std::accumulate(cost.begin(), cost.end(), Money{});
}

UsageStats medium_usage(const MultiModalNetwork& net, const JourneyPlan& plan) {
  UsageStats s{std::vector<std::int64_t>(net.mode_count(), 0),
               std::vector<Money>(net.mode_count())};
  const auto add = [&](const PathResult& leg, std::int64_t weight) {
    for (const Leg& l : leg.legs) {
      s.legs.at(l.mode) += weight;
      s.cost.at(l.mode) += weight * net.cost(l.edge);
    }
  };
  for (const auto& l : plan.source_legs) add(l, 1);
  for (const auto& l : plan.dest_legs) add(l, 1);
  const auto m = common_multiplier(plan.sharing, plan.agent_count());
  for (const auto& l : plan.common_legs) add(l, m);
  return s;
}

// --------------------------------------------------------------- instances

namespace {

// Stream salts keep instance draws and baseline seeds independent.
constexpr std::uint64_t kInstanceSalt = 0x1157A4CE;
constexpr std::uint64_t kBaselineSalt = 0xBA5E11E5;

std::uint64_t cell_key(std::size_t k, std::size_t p, std::size_t run) {
  return (static_cast<std::uint64_t>(k) << 40) ^
         (static_cast<std::uint64_t>(p) << 20) ^ run;
}

}  // namespace

QueryInstance draw_instance(const MultiModalNetwork& net,
                            const ExperimentConfig& cfg, std::size_t agents,
                            std::size_t k, std::size_t p, std::size_t run) {
  const std::size_t n = net.poi_count();
  SplitMix64 rng(mix_seed(cfg.seed ^ kInstanceSalt, cell_key(k, p, run)));

  std::vector<std::size_t> sizes(k, p);
  if (!cfg.equal_category_sizes)
    for (auto& s : sizes) s = 1 + rng.uniform(2 * p - 1);
  const std::size_t needed = std::accumulate(sizes.begin(), sizes.end(),
                                             std::size_t{0});
  if (needed > n)
    throw PreconditionError("network has " + std::to_string(n) +
                            " PoIs; the instance needs " +
                            std::to_string(needed));

  // Partial Fisher-Yates for distinct category PoIs.
  std::vector<PoiId> ids(n);
  std::iota(ids.begin(), ids.end(), PoiId{0});
  for (std::size_t i = 0; i < needed; ++i)
    std::swap(ids[i], ids[i + rng.uniform(n - i)]);

  QueryInstance inst;
  std::size_t at = 0;
  for (std::size_t c = 0; c < k; ++c) {
    inst.categories.emplace_back(ids.begin() + at, ids.begin() + at + sizes[c]);
    at += sizes[c];
  }
  // Endpoints come from a separate stream so that the agent list for a
  // smaller count is a prefix of the one for a larger count.
  SplitMix64 endpoints(mix_seed(cfg.seed ^ kInstanceSalt,
                                ~cell_key(k, p, run)));
  for (std::size_t a = 0; a < agents; ++a) {
    const PoiId s = endpoints.uniform(n);
    const PoiId d = endpoints.uniform(n);
    inst.agents.push_back(Agent{s, d});
  }
  return inst;
}

std::vector<ResultRow> run_experiment(const MultiModalNetwork& net,
                                      const ExperimentConfig& cfg) {
  cfg.validate();
  const std::size_t max_k =
      *std::max_element(cfg.category_counts.begin(), cfg.category_counts.end());
  const std::size_t max_p = *std::max_element(cfg.pois_per_category.begin(),
                                              cfg.pois_per_category.end());
  const std::size_t worst = max_k * (cfg.equal_category_sizes ? max_p
                                                              : 2 * max_p - 1);
  if (worst > net.poi_count())
    throw PreconditionError(
        "network too small: " + std::to_string(net.poi_count()) +
        " PoIs for up to " + std::to_string(worst) + " category PoIs");

  std::vector<ResultRow> rows;
  for (std::size_t agents : cfg.agent_counts) {
    for (std::size_t k : cfg.category_counts) {
      for (std::size_t p : cfg.pois_per_category) {
        for (std::size_t run = 0; run < cfg.runs; ++run) {
          const auto inst = draw_instance(net, cfg, agents, k, p, run);
          const std::uint64_t seed =
              mix_seed(cfg.seed ^ kBaselineSalt, cell_key(k, p, run));
          for (Method method : cfg.methods) {
            const auto start = std::chrono::steady_clock::now();
            const JourneyPlan plan = solve(method, net, inst, cfg.sharing, seed);
            const auto stop = std::chrono::steady_clock::now();
            ResultRow row;
            row.method = method;
            row.agents = agents;
            row.k = k;
            row.pois_per_category = p;
            row.run = run;
            row.total_cost = plan.total_cost;
            row.wall_time_ms =
                std::chrono::duration<double, std::milli>(stop - start).count();
            row.usage = medium_usage(net, plan);
            rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  return rows;
}

// ---------------------------------------------------------------------- CSV

std::vector<std::string> csv_header(const FareTable& fares) {
  std::vector<std::string> h{"method", "agents", "k", "pois_per_category",
                             "run", "total_cost_cents", "wall_time_ms"};
  for (ModeId m = 0; m < fares.size(); ++m)
    h.push_back("legs_" + fares.name(m));
  for (ModeId m = 0; m < fares.size(); ++m)
    h.push_back("cost_cents_" + fares.name(m));
  return h;
}

namespace {

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csv_escape(fields[i]);
  }
  out << '\n';
}

std::string fixed(double v, int decimals) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(decimals) << v;
  return s.str();
}

}  // namespace

void emit_csv(const std::vector<ResultRow>& rows, const FareTable& fares,
              std::ostream& out) {
  write_row(out, csv_header(fares));
  for (const auto& r : rows) {
    std::vector<std::string> f{std::string(to_string(r.method)),
                               std::to_string(r.agents),
                               std::to_string(r.k),
                               std::to_string(r.pois_per_category),
                               std::to_string(r.run),
                               std::to_string(r.total_cost.value()),
                               fixed(r.wall_time_ms, 3)};
    for (ModeId m = 0; m < fares.size(); ++m)
      f.push_back(std::to_string(m < r.usage.legs.size() ? r.usage.legs[m] : 0));
    for (ModeId m = 0; m < fares.size(); ++m)
      f.push_back(std::to_string(
          m < r.usage.cost.size() ? r.usage.cost[m].value() : 0));
    write_row(out, f);
  }
}

void emit_csv(const std::vector<ResultRow>& rows, const FareTable& fares,
              const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  emit_csv(rows, fares, out);
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows) {
  std::vector<SummaryRow> out;
  std::map<std::tuple<Method, std::size_t, std::size_t, std::size_t>,
           std::size_t>
      slot;
  for (const auto& r : rows) {
    const auto key = std::make_tuple(r.method, r.agents, r.k,
                                     r.pois_per_category);
    auto [it, fresh] = slot.try_emplace(key, out.size());
    if (fresh) {
      SummaryRow s;
      s.method = r.method;
      s.agents = r.agents;
      s.k = r.k;
      s.pois_per_category = r.pois_per_category;
      s.mean_legs.assign(r.usage.legs.size(), 0.0);
      out.push_back(std::move(s));
    }
    auto& s = out[it->second];
    ++s.runs;
    s.mean_cost_cents += static_cast<double>(r.total_cost.value());
    s.mean_wall_time_ms += r.wall_time_ms;
    for (std::size_t m = 0; m < r.usage.legs.size() && m < s.mean_legs.size();
         ++m)
      s.mean_legs[m] += static_cast<double>(r.usage.legs[m]);
  }
  for (auto& s : out) {
    const double n = static_cast<double>(s.runs);
    s.mean_cost_cents /= n;
    s.mean_wall_time_ms /= n;
    for (auto& l : s.mean_legs) l /= n;
  }
  return out;
}

void emit_summary(const std::vector<SummaryRow>& rows, const FareTable& fares,
                  std::ostream& out) {
  std::vector<std::string> h{"method", "agents", "k", "pois_per_category",
                             "runs", "mean_cost_cents", "mean_wall_time_ms"};
  for (ModeId m = 0; m < fares.size(); ++m)
    h.push_back("mean_legs_" + fares.name(m));
  write_row(out, h);
  for (const auto& s : rows) {
    std::vector<std::string> f{std::string(to_string(s.method)),
                               std::to_string(s.agents),
                               std::to_string(s.k),
                               std::to_string(s.pois_per_category),
                               std::to_string(s.runs),
                               fixed(s.mean_cost_cents, 2),
                               fixed(s.mean_wall_time_ms, 3)};
    for (ModeId m = 0; m < fares.size(); ++m)
      f.push_back(fixed(m < s.mean_legs.size() ? s.mean_legs[m] : 0.0, 2));
    write_row(out, f);
  }
}

// ---------------------------------------------------------------- synthetic

MultiModalNetwork synthetic_network(const SyntheticConfig& cfg) {
  if (cfg.poi_count == 0) throw PreconditionError("synthetic network is empty");
  const FareTable fares =
      resolve_fares(switzerland_fares(), cfg.fare_strategy, cfg.seed);
  SplitMix64 rng(cfg.seed);
  NetworkBuilder b(fares);

  // Roughly a city-sized box; 1 degree latitude ~ 111 km.
  const GeoPoint origin{47.37, 8.54};
  const double deg_lat = cfg.extent_m / 111'000.0;
  const double deg_lon = deg_lat / std::cos(origin.lat * 3.14159265358979 / 180);
  std::vector<GeoPoint> at;
  for (std::size_t i = 0; i < cfg.poi_count; ++i) {
    at.push_back(GeoPoint{origin.lat + rng.unit() * deg_lat,
                          origin.lon + rng.unit() * deg_lon});
    b.add_poi("p" + std::to_string(i), at.back(), "PoI " + std::to_string(i));
  }

  std::map<std::pair<PoiId, PoiId>, bool> linked;
  std::vector<std::pair<double, PoiId>> by_distance;
  const std::size_t max_modes =
      std::max<std::size_t>(1, std::min(cfg.max_modes_per_link, fares.size()));
  for (PoiId u = 0; u < cfg.poi_count; ++u) {
    by_distance.clear();
    for (PoiId v = 0; v < cfg.poi_count; ++v)
      if (v != u) by_distance.emplace_back(haversine_m(at[u], at[v]), v);
    const std::size_t take = std::min(cfg.neighbours, by_distance.size());
    std::partial_sort(by_distance.begin(), by_distance.begin() + take,
                      by_distance.end());
    for (std::size_t i = 0; i < take; ++i) {
      const PoiId v = by_distance[i].second;
      const auto key = std::minmax(u, v);
      if (!linked.try_emplace({key.first, key.second}, true).second) continue;
      // Distinct modes via a partial shuffle of the mode ids.
      std::vector<ModeId> modes(fares.size());
      std::iota(modes.begin(), modes.end(), ModeId{0});
      const std::size_t count = 1 + rng.uniform(max_modes);
      for (std::size_t j = 0; j < count; ++j)
        std::swap(modes[j], modes[j + rng.uniform(modes.size() - j)]);
      std::sort(modes.begin(), modes.begin() + count);
      const double d = by_distance[i].first;
      for (std::size_t j = 0; j < count; ++j) {
        // Modes differ a little in speed so time costs are not collinear.
        const double speed = cfg.speed_m_per_min * (0.75 + 0.5 * rng.unit());
        b.add_edge(key.first, key.second, modes[j], d, d / speed);
      }
    }
  }
  return connect_components(std::move(b).finalize()).network;
}

}  // namespace gtpmm

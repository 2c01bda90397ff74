#include "test_support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "gtpmm/document.hpp"

#include "gtpmm/ingest.hpp"

namespace gtpmm::testing {

std::filesystem::path data_dir() { return GTPMM_DATA_DIR; }

PoiId TenPoi::v(int i) const { return net.poi_id("v" + std::to_string(i)); }

TenPoi load_ten_poi() {
  const auto dir = data_dir() / "fixtures" / "ten_poi";
  const FareTable fares =
      resolve_fares(load_fare_config(dir / "fares.csv"), FareStrategy::Low);
  TenPoi f{load_edge_list(dir / "edges.csv", fares, dir / "pois.csv"), {}};
  f.query.agents = {{f.v(1), f.v(10)}, {f.v(2), f.v(9)}};
  f.query.categories = {{f.v(3), f.v(4)}, {f.v(5), f.v(6)}, {f.v(7), f.v(8)}};
  return f;
}

MultiModalNetwork random_network(std::mt19937_64& rng,
                                 const RandomNetworkSpec& spec) {
  auto pick = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  FareTable fares;
  for (std::size_t m = 0; m < spec.modes; ++m)
    fares.add_mode("M" + std::to_string(m),
                   FarePolicy{Money(pick(0, 300)), Rate::from_cents(pick(0, 3)),
                              Rate::from_cents(pick(0, 10))});
  NetworkBuilder b(fares);
  for (std::size_t i = 0; i < spec.pois; ++i) b.add_poi("n" + std::to_string(i));

  const auto link = [&](PoiId u, PoiId v) {
    const std::size_t count = static_cast<std::size_t>(pick(1, spec.modes));
    std::vector<ModeId> modes(spec.modes);
    std::iota(modes.begin(), modes.end(), ModeId{0});
    std::shuffle(modes.begin(), modes.end(), rng);
    for (std::size_t j = 0; j < count; ++j)
      b.add_edge(u, v, modes[j], static_cast<double>(pick(1, 50)),
                 static_cast<double>(pick(1, 10)));
  };
  if (spec.pois >= 2) {
    if (spec.connected) {
      for (PoiId v = 1; v < spec.pois; ++v)
        link(static_cast<PoiId>(pick(0, static_cast<std::int64_t>(v) - 1)), v);
    }
    for (std::size_t e = 0; e < spec.extra_links; ++e) {
      const auto u = static_cast<PoiId>(pick(0, spec.pois - 1));
      const auto v = static_cast<PoiId>(pick(0, spec.pois - 1));
      if (u != v) link(u, v);
    }
  }
  return std::move(b).finalize();
}

QueryInstance random_instance(std::mt19937_64& rng,
                              const MultiModalNetwork& net, std::size_t k,
                              std::size_t max_per_category,
                              std::size_t agents) {
  const std::size_t n = net.poi_count();
  QueryInstance inst;
  std::vector<PoiId> ids(n);
  std::iota(ids.begin(), ids.end(), PoiId{0});
  for (std::size_t c = 0; c < k; ++c) {
    std::shuffle(ids.begin(), ids.end(), rng);
    const auto size = std::uniform_int_distribution<std::size_t>(
        1, std::min(max_per_category, n))(rng);
    inst.categories.emplace_back(ids.begin(), ids.begin() + size);
  }
  std::uniform_int_distribution<PoiId> any(0, n - 1);
  for (std::size_t a = 0; a < agents; ++a)
    inst.agents.push_back(Agent{any(rng), any(rng)});
  return inst;
}

std::optional<Money> brute_force_path_cost(const MultiModalNetwork& net,
                                           PoiId source, PoiId target) {
  if (source == target) return Money(0);
  std::optional<Money> best;
  std::vector<bool> on_path(net.poi_count(), false);
  std::function<void(PoiId, Money)> walk = [&](PoiId at, Money so_far) {
    if (best && so_far >= *best) return;
    if (at == target) {
      if (!best || so_far < *best) best = so_far;
      return;
    }
    on_path[at] = true;
    for (const auto& e : net.edges()) {
      if (e.u != at && e.v != at) continue;
      const PoiId next = e.u == at ? e.v : e.u;
      if (on_path[next]) continue;
      walk(next, so_far + edge_cost(e, net.fares()));
    }
    on_path[at] = false;
  };
  walk(source, Money(0));
  return best;
}

Money brute_force_group_cost(const MultiModalNetwork& net,
                             const QueryInstance& inst, SharingMode sharing) {
  std::map<std::pair<PoiId, PoiId>, std::optional<Money>> memo;
  const auto sp = [&](PoiId a, PoiId b) {
    auto key = std::minmax(a, b);
    auto it = memo.find({key.first, key.second});
    if (it == memo.end())
      it = memo.emplace(std::make_pair(key.first, key.second),
                        brute_force_path_cost(net, a, b))
               .first;
    return it->second;
  };
  const std::int64_t m = sharing == SharingMode::SharedIntermediate
                             ? 1
                             : static_cast<std::int64_t>(inst.agents.size());
  Money best = Money::infinity();
  std::vector<PoiId> tuple(inst.categories.size());
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == tuple.size()) {
      Money total;
      for (const auto& a : inst.agents) {
        const auto s = sp(a.source, tuple.front());
        const auto d = sp(tuple.back(), a.destination);
        if (!s || !d) return;
        total += *s + *d;
      }
      for (std::size_t j = 0; j + 1 < tuple.size(); ++j) {
        const auto x = sp(tuple[j], tuple[j + 1]);
        if (!x) return;
        total += m * *x;
      }
      best = std::min(best, total);
      return;
    }
    for (PoiId p : inst.categories[c]) {
      tuple[c] = p;
      rec(c + 1);
    }
  };
  rec(0);
  return best;
}

PathResult path_over(const MultiModalNetwork& net,
                     const std::vector<std::string>& pois,
                     const std::vector<std::string>& modes) {
  if (pois.empty() || modes.size() + 1 != pois.size())
    throw std::invalid_argument("path_over: need one mode per hop");
  PathResult out;
  out.poi_sequence.push_back(net.poi_id(pois.front()));
  for (std::size_t h = 0; h < modes.size(); ++h) {
    const PoiId from = net.poi_id(pois[h]);
    const PoiId to = net.poi_id(pois[h + 1]);
    const auto mode = net.fares().find(modes[h]);
    std::optional<EdgeId> found;
    for (EdgeId e : net.incident(from))
      if (net.edge(e).other(from) == to && mode && net.edge(e).mode == *mode)
        found = e;
    if (!found)
      throw std::invalid_argument("path_over: no " + modes[h] + " edge " +
                                  pois[h] + "-" + pois[h + 1]);
    out.legs.push_back(Leg{*found, *mode});
    out.poi_sequence.push_back(to);
    out.cost += net.cost(*found);
  }
  return out;
}

namespace {

Minutes minutes(const nlohmann::json& v) {
  if (v.is_number()) return v.get<double>();
  return *parse_gtfs_time(v.get<std::string>() + ":00");
}

TimingReport::Reason reason_from(const std::string& text) {
  if (text == "no_covering_trip") return TimingReport::Reason::NoCoveringTrip;
  if (text == "no_trip_after_previous")
    return TimingReport::Reason::NoTripAfterPrevious;
  throw std::invalid_argument("unknown reason " + text);
}

}  // namespace

std::vector<TimingCase> load_timing_cases(const MultiModalNetwork& net) {
  std::ifstream in(data_dir() / "fixtures" / "timing" / "cases.json");
  const auto doc = nlohmann::json::parse(in);
  std::vector<TimingCase> out;
  for (const auto& c : doc.at("cases")) {
    TimingCase tc;
    tc.name = c.at("name").get<std::string>();
    tc.start = minutes(c.at("start"));
    for (const auto& leg : c.at("legs"))
      tc.legs.push_back(path_over(net, leg.at("pois").get<std::vector<std::string>>(),
                                    leg.at("modes").get<std::vector<std::string>>()));
    tc.timetable = timetable_from_json(c, net);
    const auto& e = c.at("expect");
    tc.feasible = e.at("feasible").get<bool>();
    if (!tc.feasible) {
      tc.ride = e.at("ride").get<std::size_t>();
      tc.reason = reason_from(e.at("reason").get<std::string>());
    }
    if (e.contains("assignment"))
      tc.assignment = e.at("assignment").get<std::vector<std::size_t>>();
    out.push_back(std::move(tc));
  }
  return out;
}

std::string check_timing_case(const MultiModalNetwork& net,
                              const TimingCase& tc) {
  std::vector<const PathResult*> legs;
  for (const auto& l : tc.legs) legs.push_back(&l);
  const auto r = validate_journey(net, legs, tc.timetable, tc.start);
  if (r.feasible != tc.feasible)
    return tc.name + ": feasible=" + (r.feasible ? "true" : "false");
  if (!tc.feasible && (r.ride != tc.ride || r.reason != tc.reason))
    return tc.name + ": ride " + std::to_string(r.ride) + ", reason " +
           std::to_string(static_cast<int>(r.reason));
  if (tc.assignment && r.assignment != *tc.assignment)
    return tc.name + ": unexpected trip assignment";
  return {};
}

}  // namespace gtpmm::testing

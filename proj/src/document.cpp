#include "gtpmm/document.hpp"

#include <algorithm>
#include <fstream>

#include "gtpmm/errors.hpp"
#include "gtpmm/ingest.hpp"

namespace gtpmm {

using nlohmann::json;

namespace {

PoiId poi_from_json(const json& v, const MultiModalNetwork& net) {
  if (v.is_string()) return net.poi_id(v.get<std::string>());
  if (v.is_number_unsigned()) {
    const auto id = v.get<PoiId>();
    if (!net.valid(id))
      throw PreconditionError("PoI id " + std::to_string(id) + " out of range");
    return id;
  }
  throw PreconditionError("PoI reference must be a string or an id");
}

json leg_to_json(const PathResult& leg, const MultiModalNetwork& net) {
  json pois = json::array();
  for (PoiId p : leg.poi_sequence) pois.push_back(net.poi(p).external_id);
  json modes = json::array();
  json hop_costs = json::array();
  for (const Leg& l : leg.legs) {
    modes.push_back(net.fares().name(l.mode));
    hop_costs.push_back(net.cost(l.edge).value());
  }
  return json{{"pois", pois},
              {"modes", modes},
              {"hop_costs_cents", hop_costs},
              {"cost_cents", leg.cost.value()}};
}

double minutes_from_json(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    auto text = v.get<std::string>();
    if (std::count(text.begin(), text.end(), ':') == 1) text += ":00";
    if (auto m = parse_gtfs_time(text)) return *m;
  }
  throw PreconditionError("invalid time " + v.dump());
}

}  // namespace

QueryInstance query_from_json(const json& doc, const MultiModalNetwork& net) {
  try {
    QueryInstance inst;
    for (const auto& a : doc.at("agents")) {
      if (a.is_array() && a.size() == 2)
        inst.agents.push_back(
            Agent{poi_from_json(a[0], net), poi_from_json(a[1], net)});
      else
        inst.agents.push_back(Agent{poi_from_json(a.at("source"), net),
                                    poi_from_json(a.at("destination"), net)});
    }
    for (const auto& cat : doc.at("categories")) {
      auto& out = inst.categories.emplace_back();
      for (const auto& p : cat) out.push_back(poi_from_json(p, net));
    }
    inst.validate(net);
    return inst;
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("malformed query document: ") +
                            e.what());
  }
}

json query_to_json(const QueryInstance& inst, const MultiModalNetwork& net) {
  json agents = json::array();
  for (const auto& a : inst.agents)
    agents.push_back({net.poi(a.source).external_id,
                      net.poi(a.destination).external_id});
  json cats = json::array();
  for (const auto& c : inst.categories) {
    json ids = json::array();
    for (PoiId p : c) ids.push_back(net.poi(p).external_id);
    cats.push_back(ids);
  }
  return json{{"agents", agents}, {"categories", cats}};
}

QueryInstance load_query(const std::filesystem::path& path,
                         const MultiModalNetwork& net) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open query file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string(), 0, e.what());
  }
  return query_from_json(doc, net);
}

json plan_to_json(const JourneyPlan& plan, const MultiModalNetwork& net,
                  std::string_view method) {
  json common = json::array();
  for (PoiId p : plan.common_pois) common.push_back(net.poi(p).external_id);
  json common_legs = json::array();
  for (const auto& l : plan.common_legs) common_legs.push_back(leg_to_json(l, net));
  json agents = json::array();
  for (std::size_t a = 0; a < plan.agent_count(); ++a) {
    Money own;
    json legs = json::array();
    for (const PathResult* l : plan.agent_journey(a)) {
      legs.push_back(leg_to_json(*l, net));
      own += l->cost;
    }
    agents.push_back(
        json{{"source", net.poi(plan.source_legs[a].front()).external_id},
             {"destination", net.poi(plan.dest_legs[a].back()).external_id},
             {"legs", legs},
             {"journey_cost_cents", own.value()}});
  }
  return json{{"method", method},
              {"sharing", to_string(plan.sharing)},
              {"common_pois", common},
              {"common_legs", common_legs},
              {"agents", agents},
              {"total_cost_cents", plan.total_cost.value()}};
}

Timetable timetable_from_json(const json& doc, const MultiModalNetwork& net) {
  try {
    std::vector<Trip> trips;
    for (const auto& t : doc.at("trips")) {
      Trip trip;
      for (const auto& p : t.at("route")) trip.route.push_back(poi_from_json(p, net));
      const auto mode = net.fares().find(t.at("mode").get<std::string>());
      if (!mode)
        throw ConfigError("unknown mode '" + t.at("mode").get<std::string>() +
                          "'");
      trip.mode = *mode;
      trip.start_time = minutes_from_json(t.at("start"));
      trip.end_time = minutes_from_json(t.at("end"));
      trips.push_back(std::move(trip));
    }
    return Timetable(std::move(trips));
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("malformed timetable document: ") +
                            e.what());
  }
}

}  // namespace gtpmm

#pragma once

#include <filesystem>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gtpmm/network.hpp"
#include "gtpmm/planner.hpp"
#include "gtpmm/timetable.hpp"

namespace gtpmm {

// Query document:
//   {"agents": [["v1", "v10"], ["v2", "v9"]],
//    "categories": [["v3", "v4"], ["v5", "v6"]]}
// Ids are external PoI ids (strings) or internal ids (integers).
QueryInstance query_from_json(const nlohmann::json& doc,
                              const MultiModalNetwork& net);
nlohmann::json query_to_json(const QueryInstance& inst,
                             const MultiModalNetwork& net);
QueryInstance load_query(const std::filesystem::path& path,
                         const MultiModalNetwork& net);

// Plan document with common PoIs, per-agent legs (PoI sequence, mode names,
// per-hop and per-leg cost in cents) and the total cost.
nlohmann::json plan_to_json(const JourneyPlan& plan,
                            const MultiModalNetwork& net,
                            std::string_view method);

// Timetable document:
//   {"trips": [{"route": ["A", "B"], "mode": "Bus",
//               "start": "09:00", "end": "09:05"}]}
// Times are "HH:MM" / "HH:MM:SS" strings or minute numbers.
Timetable timetable_from_json(const nlohmann::json& doc,
                              const MultiModalNetwork& net);

}  // namespace gtpmm

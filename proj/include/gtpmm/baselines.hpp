#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gtpmm/network.hpp"
#include "gtpmm/planner.hpp"

namespace gtpmm {

enum class BaselineKind { Rprm, Rpcm, Nncm };

// Every solver the CLI and the bench harness can run.
enum class Method { Ojpa, Rprm, Rpcm, Nncm };

inline constexpr Method kAllMethods[] = {Method::Ojpa, Method::Rprm,
                                         Method::Rpcm, Method::Nncm};

std::string_view to_string(Method method);
Method parse_method(std::string_view text);
bool is_randomized(Method method);

// Fewest-hops path; BFS expands neighbours in ascending id order. The legs
// are filled with the cheapest parallel edge per hop. Absent if unreachable.
std::optional<PathResult> fewest_hops_path(const MultiModalNetwork& net,
                                           PoiId source, PoiId target);

// Random PoI per category; every hop of every fewest-hops leg takes a
// uniformly random parallel edge.
JourneyPlan rprm(const MultiModalNetwork& net, const QueryInstance& inst,
                 std::uint64_t seed,
                 SharingMode sharing = SharingMode::PerPersonIntermediate);

// Random PoI per category (same draws as rprm for the same seed), cheapest
// legs.
JourneyPlan rpcm(const MultiModalNetwork& net, const QueryInstance& inst,
                 std::uint64_t seed,
                 SharingMode sharing = SharingMode::PerPersonIntermediate);

// First PoI nearest to the whole group, then greedily the nearest PoI of
// each next category from the previous pick. Cheapest legs, ties by id.
JourneyPlan nncm(const MultiModalNetwork& net, const QueryInstance& inst,
                 SharingMode sharing = SharingMode::PerPersonIntermediate);

// Dispatches to plan() or one of the baselines. `seed` is ignored by the
// deterministic methods.
JourneyPlan solve(Method method, const MultiModalNetwork& net,
                  const QueryInstance& inst, SharingMode sharing,
                  std::uint64_t seed);

}  // namespace gtpmm

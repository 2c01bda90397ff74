#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gtpmm/money.hpp"
#include "gtpmm/network.hpp"

namespace gtpmm {

struct Agent {
  PoiId source = 0;
  PoiId destination = 0;

  friend bool operator==(const Agent&, const Agent&) = default;
};

// Agents plus the ordered intermediate categories V_1..V_k.
struct QueryInstance {
  std::vector<Agent> agents;
  std::vector<std::vector<PoiId>> categories;

  std::size_t agent_count() const { return agents.size(); }
  std::size_t category_count() const { return categories.size(); }

  // Throws PreconditionError for no agents, no categories, an empty
  // category, or an id outside the network.
  void validate(const MultiModalNetwork& net) const;

  friend bool operator==(const QueryInstance&, const QueryInstance&) = default;
};

enum class SharingMode {
  // Common legs are paid by every agent (multiplied by the agent count).
  PerPersonIntermediate,
  // Common legs are paid once for the group.
  SharedIntermediate,
};

std::string_view to_string(SharingMode mode);
SharingMode parse_sharing(std::string_view text);

// Weight applied to the common-path cost.
std::int64_t common_multiplier(SharingMode mode, std::size_t agents);

// Memoized cheapest-cost legs between PoI pairs. Each distinct origin runs
// one Dijkstra, lazily; pair lookups are then answered from its tree.
class LegCache {
 public:
  explicit LegCache(const MultiModalNetwork& net) : net_(&net) {}

  // Throws InfeasibleError naming the pair when `to` is unreachable.
  const PathResult& leg(PoiId from, PoiId to);
  Money cost(PoiId from, PoiId to) { return leg(from, to).cost; }
  std::optional<Money> try_cost(PoiId from, PoiId to);

  const MultiModalNetwork& network() const { return *net_; }
  std::size_t dijkstra_runs() const { return trees_.size(); }
  std::size_t pair_lookups() const { return legs_.size(); }

 private:
  const ShortestPathTree& tree(PoiId from);

  const MultiModalNetwork* net_;
  std::map<PoiId, ShortestPathTree> trees_;
  std::map<std::pair<PoiId, PoiId>, PathResult> legs_;
};

// Layered DP state. Layer c holds one entry per PoI of categories[c], in the
// same order. parent is an index into layer c-1 (kNoId for layer 0).
struct DpTable {
  std::vector<std::vector<Money>> cost;
  std::vector<std::vector<std::size_t>> parent;
  // Per agent: min over the last layer of cost + leg to that destination.
  std::vector<Money> destination_totals;
  // Index into the last layer of the optimum, or kNoId if none.
  std::size_t best_last = kNoId;
  Money best_total = Money::infinity();
};

struct JourneyPlan {
  std::vector<PoiId> common_pois;
  std::vector<PathResult> common_legs;
  std::vector<PathResult> source_legs;
  std::vector<PathResult> dest_legs;
  SharingMode sharing = SharingMode::PerPersonIntermediate;
  Money total_cost;

  std::size_t agent_count() const { return source_legs.size(); }

  // Source leg, then every common leg, then the destination leg.
  std::vector<const PathResult*> agent_journey(std::size_t agent) const;

  friend bool operator==(const JourneyPlan&, const JourneyPlan&) = default;
};

// Group cost recomputed from a plan's legs.
Money plan_cost_from_legs(const JourneyPlan& plan);

// Assembles a plan for a fixed common path using the cached cheapest legs.
JourneyPlan assemble_plan(LegCache& cache, const QueryInstance& inst,
                          std::span<const PoiId> common_pois,
                          SharingMode sharing);

struct PlanStats {
  std::size_t dijkstra_runs = 0;
  std::size_t pair_lookups = 0;
};

// Runs the layered DP. Exposed for inspection; plan() wraps it.
DpTable solve_layers(LegCache& cache, const QueryInstance& inst,
                     SharingMode sharing);

// Walks parent links back from an index into the last layer. Throws
// InternalError on a broken chain or an infinite end entry.
std::vector<PoiId> reconstruct(const DpTable& dp, const QueryInstance& inst,
                               std::size_t best_last);

// Exact minimum group-cost plan. Throws PreconditionError for a malformed
// instance and InfeasibleError when some mandatory pair is disconnected.
JourneyPlan plan(const MultiModalNetwork& net, const QueryInstance& inst,
                 SharingMode sharing = SharingMode::PerPersonIntermediate,
                 PlanStats* stats = nullptr);

// Group cost of a fixed common path with cheapest legs.
Money group_cost(const MultiModalNetwork& net, const QueryInstance& inst,
                 std::span<const PoiId> common_pois, SharingMode sharing);

}  // namespace gtpmm

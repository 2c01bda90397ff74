#include "gtpmm/planner.hpp"

#include <algorithm>
#include <string>

#include "gtpmm/errors.hpp"

namespace gtpmm {

void QueryInstance::validate(const MultiModalNetwork& net) const {
  if (agents.empty()) throw PreconditionError("query has no agents");
  if (categories.empty()) throw PreconditionError("query has no categories");
  for (std::size_t c = 0; c < categories.size(); ++c) {
    if (categories[c].empty())
      throw PreconditionError("category " + std::to_string(c) + " is empty");
    for (PoiId p : categories[c])
      if (!net.valid(p))
        throw PreconditionError("category " + std::to_string(c) +
                                " references unknown PoI " + std::to_string(p));
  }
  for (std::size_t a = 0; a < agents.size(); ++a)
    if (!net.valid(agents[a].source) || !net.valid(agents[a].destination))
      throw PreconditionError("agent " + std::to_string(a) +
                              " references an unknown PoI");
}

std::string_view to_string(SharingMode mode) {
  return mode == SharingMode::SharedIntermediate ? "shared" : "per-person";
}

SharingMode parse_sharing(std::string_view text) {
  if (text == "shared") return SharingMode::SharedIntermediate;
  if (text == "per-person") return SharingMode::PerPersonIntermediate;
  throw ConfigError("unknown sharing mode '" + std::string(text) + "'");
}

std::int64_t common_multiplier(SharingMode mode, std::size_t agents) {
  return mode == SharingMode::SharedIntermediate
             ? 1
             : static_cast<std::int64_t>(agents);
}

// ------------------------------------------------------------------ LegCache

const ShortestPathTree& LegCache::tree(PoiId from) {
  auto it = trees_.find(from);
  if (it == trees_.end()) it = trees_.try_emplace(from, *net_, from).first;
  return it->second;
}

std::optional<Money> LegCache::try_cost(PoiId from, PoiId to) {
  const auto& t = tree(from);
  if (!t.reachable(to)) return std::nullopt;
  return leg(from, to).cost;
}

const PathResult& LegCache::leg(PoiId from, PoiId to) {
  const auto key = std::make_pair(from, to);
  if (auto it = legs_.find(key); it != legs_.end()) return it->second;
  auto path = tree(from).path_to(to);
  if (!path) {
    throw InfeasibleError(
        from, to,
        "no path between PoI '" + net_->poi(from).external_id + "' and '" +
            net_->poi(to).external_id + "'");
  }
  return legs_.emplace(key, std::move(*path)).first->second;
}

// --------------------------------------------------------------- JourneyPlan

std::vector<const PathResult*> JourneyPlan::agent_journey(
    std::size_t agent) const {
  std::vector<const PathResult*> out;
  out.push_back(&source_legs.at(agent));
  for (const auto& l : common_legs) out.push_back(&l);
  out.push_back(&dest_legs.at(agent));
  return out;
}

Money plan_cost_from_legs(const JourneyPlan& plan) {
  Money individual;
  for (const auto& l : plan.source_legs) individual += l.cost;
  for (const auto& l : plan.dest_legs) individual += l.cost;
  Money common;
  for (const auto& l : plan.common_legs) common += l.cost;
  return individual +
         common_multiplier(plan.sharing, plan.agent_count()) * common;
}

JourneyPlan assemble_plan(LegCache& cache, const QueryInstance& inst,
                          std::span<const PoiId> common_pois,
                          SharingMode sharing) {
  if (common_pois.size() != inst.categories.size())
    throw PreconditionError("common path length does not match category count");
  JourneyPlan out;
  out.sharing = sharing;
  out.common_pois.assign(common_pois.begin(), common_pois.end());
  for (const auto& a : inst.agents)
    out.source_legs.push_back(cache.leg(a.source, common_pois.front()));
  for (std::size_t c = 0; c + 1 < common_pois.size(); ++c)
    out.common_legs.push_back(cache.leg(common_pois[c], common_pois[c + 1]));
  for (const auto& a : inst.agents)
    out.dest_legs.push_back(cache.leg(common_pois.back(), a.destination));
  out.total_cost = plan_cost_from_legs(out);
  return out;
}

// ------------------------------------------------------------------------ DP

namespace {

// Chain of PoIs ending at entry `j` of layer `c`, first category first.
std::vector<PoiId> chain(const DpTable& dp, const QueryInstance& inst,
                         std::size_t c, std::size_t j) {
  std::vector<PoiId> out(c + 1);
  for (std::size_t layer = c + 1; layer-- > 0;) {
    if (j == kNoId || j >= inst.categories[layer].size())
      throw InternalError("broken DP parent chain at layer " +
                          std::to_string(layer));
    out[layer] = inst.categories[layer][j];
    j = dp.parent[layer][j];
  }
  return out;
}

struct Unreachable {
  std::optional<std::pair<PoiId, PoiId>> first;
  void note(PoiId a, PoiId b) {
    if (!first) first.emplace(a, b);
  }
};

}  // namespace

DpTable solve_layers(LegCache& cache, const QueryInstance& inst,
                     SharingMode sharing) {
  const auto& net = cache.network();
  inst.validate(net);
  const std::size_t k = inst.categories.size();
  const std::int64_t m = common_multiplier(sharing, inst.agents.size());
  Unreachable unreachable;

  DpTable dp;
  dp.cost.resize(k);
  dp.parent.resize(k);

  // First category: every agent travels on its own to j.
  for (PoiId j : inst.categories[0]) {
    Money total;
    for (const auto& a : inst.agents) {
      const auto c = cache.try_cost(a.source, j);
      if (!c) {
        unreachable.note(a.source, j);
        total = Money::infinity();
        break;
      }
      total += *c;
    }
    dp.cost[0].push_back(total);
    dp.parent[0].push_back(kNoId);
  }

  // Later categories: best predecessor in the previous layer, common legs
  // weighted by the sharing multiplier. Ties go to the lexicographically
  // smaller chain so the result matches exhaustive enumeration.
  for (std::size_t c = 1; c < k; ++c) {
    const auto& prev = inst.categories[c - 1];
    for (PoiId j : inst.categories[c]) {
      Money best = Money::infinity();
      std::size_t best_parent = kNoId;
      for (std::size_t i = 0; i < prev.size(); ++i) {
        if (dp.cost[c - 1][i].is_infinite()) continue;
        const auto step = cache.try_cost(prev[i], j);
        if (!step) {
          unreachable.note(prev[i], j);
          continue;
        }
        const Money candidate = dp.cost[c - 1][i] + m * *step;
        if (candidate < best ||
            (candidate == best &&
             chain(dp, inst, c - 1, i) < chain(dp, inst, c - 1, best_parent))) {
          best = candidate;
          best_parent = i;
        }
      }
      dp.cost[c].push_back(best);
      dp.parent[c].push_back(best_parent);
    }
  }

  // Destinations.
  const auto& last = inst.categories[k - 1];
  dp.destination_totals.assign(inst.agents.size(), Money::infinity());
  for (std::size_t j = 0; j < last.size(); ++j) {
    if (dp.cost[k - 1][j].is_infinite()) continue;
    Money total = dp.cost[k - 1][j];
    for (std::size_t a = 0; a < inst.agents.size(); ++a) {
      const auto c = cache.try_cost(last[j], inst.agents[a].destination);
      if (!c) {
        unreachable.note(last[j], inst.agents[a].destination);
        total = Money::infinity();
        continue;
      }
      dp.destination_totals[a] =
          std::min(dp.destination_totals[a], dp.cost[k - 1][j] + *c);
      total = saturating_add(total, *c);
    }
    if (total.is_infinite()) continue;
    if (total < dp.best_total ||
        (total == dp.best_total &&
         chain(dp, inst, k - 1, j) < chain(dp, inst, k - 1, dp.best_last))) {
      dp.best_total = total;
      dp.best_last = j;
    }
  }

  if (dp.best_last == kNoId) {
    if (unreachable.first) {
      const auto [a, b] = *unreachable.first;
      throw InfeasibleError(a, b,
                            "no feasible journey: PoI '" +
                                net.poi(a).external_id + "' cannot reach '" +
                                net.poi(b).external_id + "'");
    }
    throw InternalError("DP produced no finite plan");
  }
  return dp;
}

std::vector<PoiId> reconstruct(const DpTable& dp, const QueryInstance& inst,
                               std::size_t best_last) {
  const std::size_t k = inst.categories.size();
  if (dp.cost.size() != k || best_last >= dp.cost[k - 1].size())
    throw InternalError("reconstruct: end entry out of range");
  if (dp.cost[k - 1][best_last].is_infinite())
    throw InternalError("reconstruct: end entry is unreachable");
  return chain(dp, inst, k - 1, best_last);
}

JourneyPlan plan(const MultiModalNetwork& net, const QueryInstance& inst,
                 SharingMode sharing, PlanStats* stats) {
  LegCache cache(net);
  const DpTable dp = solve_layers(cache, inst, sharing);
  const auto common = reconstruct(dp, inst, dp.best_last);
  JourneyPlan out = assemble_plan(cache, inst, common, sharing);
  if (out.total_cost != dp.best_total)
    throw InternalError("reconstructed plan cost differs from DP optimum");
  if (stats) {
    stats->dijkstra_runs = cache.dijkstra_runs();
    stats->pair_lookups = cache.pair_lookups();
  }
  return out;
}

Money group_cost(const MultiModalNetwork& net, const QueryInstance& inst,
                 std::span<const PoiId> common_pois, SharingMode sharing) {
  inst.validate(net);
  if (common_pois.size() != inst.categories.size())
    throw PreconditionError("common path length does not match category count");
  for (std::size_t c = 0; c < common_pois.size(); ++c) {
    const auto& cat = inst.categories[c];
    if (std::find(cat.begin(), cat.end(), common_pois[c]) == cat.end())
      throw PreconditionError("common PoI " + std::to_string(c) +
                              " is not in its category");
  }
  LegCache cache(net);
  return assemble_plan(cache, inst, common_pois, sharing).total_cost;
}

}  // namespace gtpmm

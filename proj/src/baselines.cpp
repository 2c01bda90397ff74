#include "gtpmm/baselines.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "gtpmm/errors.hpp"
#include "gtpmm/rng.hpp"

namespace gtpmm {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Ojpa: return "ojpa";
    case Method::Rprm: return "rprm";
    case Method::Rpcm: return "rpcm";
    case Method::Nncm: return "nncm";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  for (Method m : kAllMethods)
    if (to_string(m) == text) return m;
  throw ConfigError("unknown method '" + std::string(text) + "'");
}

bool is_randomized(Method method) {
  return method == Method::Rprm || method == Method::Rpcm;
}

namespace {

std::vector<PoiId> bfs_route(const MultiModalNetwork& net, PoiId source,
                             PoiId target) {
  std::vector<PoiId> parent(net.poi_count(), kNoId);
  std::vector<bool> seen(net.poi_count(), false);
  std::deque<PoiId> queue{source};
  seen[source] = true;
  while (!queue.empty() && !seen[target]) {
    const PoiId u = queue.front();
    queue.pop_front();
    for (const Hop& h : net.hops(u)) {
      if (seen[h.to]) continue;
      seen[h.to] = true;
      parent[h.to] = u;
      queue.push_back(h.to);
    }
  }
  if (!seen[target]) return {};
  std::vector<PoiId> route{target};
  while (route.back() != source) route.push_back(parent[route.back()]);
  std::reverse(route.begin(), route.end());
  return route;
}

// Fewest-hops leg with a uniformly drawn parallel edge per hop.
PathResult random_mode_leg(const MultiModalNetwork& net, PoiId source,
                           PoiId target, SplitMix64& rng) {
  const auto route = bfs_route(net, source, target);
  if (route.empty()) {
    throw InfeasibleError(source, target,
                          "no path between PoI '" +
                              net.poi(source).external_id + "' and '" +
                              net.poi(target).external_id + "'");
  }
  PathResult out;
  out.poi_sequence = route;
  std::vector<EdgeId> parallel;
  for (std::size_t h = 0; h + 1 < route.size(); ++h) {
    parallel.clear();
    for (EdgeId e : net.incident(route[h]))
      if (net.edge(e).other(route[h]) == route[h + 1] &&
          net.edge(e).u != net.edge(e).v)
        parallel.push_back(e);
    const EdgeId e = parallel[rng.uniform(parallel.size())];
    out.legs.push_back(Leg{e, net.edge(e).mode});
    out.cost += net.cost(e);
  }
  return out;
}

std::vector<PoiId> random_pois(const QueryInstance& inst, SplitMix64& rng) {
  std::vector<PoiId> out;
  for (const auto& cat : inst.categories)
    out.push_back(cat[rng.uniform(cat.size())]);
  return out;
}

}  // namespace

std::optional<PathResult> fewest_hops_path(const MultiModalNetwork& net,
                                           PoiId source, PoiId target) {
  if (!net.valid(source) || !net.valid(target))
    throw PreconditionError("PoI out of range");
  const auto route = bfs_route(net, source, target);
  if (route.empty()) return std::nullopt;
  PathResult out;
  out.poi_sequence = route;
  for (std::size_t h = 0; h + 1 < route.size(); ++h) {
    const auto e = cheapest_parallel_edge(net, route[h], route[h + 1]);
    out.legs.push_back(Leg{e->edge, net.edge(e->edge).mode});
    out.cost += e->cost;
  }
  return out;
}

JourneyPlan rprm(const MultiModalNetwork& net, const QueryInstance& inst,
                 std::uint64_t seed, SharingMode sharing) {
  inst.validate(net);
  SplitMix64 rng(seed);
  JourneyPlan out;
  out.sharing = sharing;
  out.common_pois = random_pois(inst, rng);
  for (const auto& a : inst.agents)
    out.source_legs.push_back(
        random_mode_leg(net, a.source, out.common_pois.front(), rng));
  for (std::size_t c = 0; c + 1 < out.common_pois.size(); ++c)
    out.common_legs.push_back(random_mode_leg(net, out.common_pois[c],
                                              out.common_pois[c + 1], rng));
  for (const auto& a : inst.agents)
    out.dest_legs.push_back(
        random_mode_leg(net, out.common_pois.back(), a.destination, rng));
  out.total_cost = plan_cost_from_legs(out);
  return out;
}

JourneyPlan rpcm(const MultiModalNetwork& net, const QueryInstance& inst,
                 std::uint64_t seed, SharingMode sharing) {
  inst.validate(net);
  SplitMix64 rng(seed);
  const auto common = random_pois(inst, rng);
  LegCache cache(net);
  return assemble_plan(cache, inst, common, sharing);
}

JourneyPlan nncm(const MultiModalNetwork& net, const QueryInstance& inst,
                 SharingMode sharing) {
  inst.validate(net);
  LegCache cache(net);
  std::vector<PoiId> common;

  const auto argmin = [](const std::vector<PoiId>& cat, auto&& cost_of) {
    PoiId best = kNoId;
    Money best_cost = Money::infinity();
    for (PoiId p : cat) {
      const Money c = cost_of(p);
      if (c < best_cost || (c == best_cost && p < best)) {
        best = p;
        best_cost = c;
      }
    }
    return best;
  };

  PoiId first = argmin(inst.categories[0], [&](PoiId j) {
    Money total;
    for (const auto& a : inst.agents) {
      const auto c = cache.try_cost(a.source, j);
      if (!c) return Money::infinity();
      total += *c;
    }
    return total;
  });
  if (first == kNoId) {
    const auto& a = inst.agents.front();
    throw InfeasibleError(a.source, inst.categories[0].front(),
                          "no PoI of the first category reachable by all agents");
  }
  common.push_back(first);
  for (std::size_t c = 1; c < inst.categories.size(); ++c) {
    const PoiId prev = common.back();
    const PoiId next = argmin(inst.categories[c], [&](PoiId j) {
      return cache.try_cost(prev, j).value_or(Money::infinity());
    });
    if (next == kNoId)
      throw InfeasibleError(prev, inst.categories[c].front(),
                            "no PoI of category " + std::to_string(c) +
                                " reachable from the previous pick");
    common.push_back(next);
  }
  return assemble_plan(cache, inst, common, sharing);
}

JourneyPlan solve(Method method, const MultiModalNetwork& net,
                  const QueryInstance& inst, SharingMode sharing,
                  std::uint64_t seed) {
  switch (method) {
    case Method::Ojpa: return plan(net, inst, sharing);
    case Method::Rprm: return rprm(net, inst, seed, sharing);
    case Method::Rpcm: return rpcm(net, inst, seed, sharing);
    case Method::Nncm: return nncm(net, inst, sharing);
  }
  throw ConfigError("unknown method");
}

}  // namespace gtpmm

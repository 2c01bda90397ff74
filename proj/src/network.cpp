#include "gtpmm/network.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <queue>
#include <tuple>

#include "gtpmm/errors.hpp"

namespace gtpmm {

// ---------------------------------------------------------------- FareTable

ModeId FareTable::add_mode(std::string name, FarePolicy policy) {
  if (find(name)) throw ConfigError("duplicate mode '" + name + "'");
  if (policy.base_fare.value() < 0 || policy.cost_per_meter.raw() < 0 ||
      policy.cost_per_minute.raw() < 0) {
    throw ConfigError("negative fare component for mode '" + name + "'");
  }
  names_.push_back(std::move(name));
  policies_.push_back(policy);
  return names_.size() - 1;
}

const std::string& FareTable::name(ModeId m) const {
  if (!contains(m))
    throw ConfigError("no fare policy for mode id " + std::to_string(m));
  return names_[m];
}

const FarePolicy& FareTable::policy(ModeId m) const {
  if (!contains(m))
    throw ConfigError("no fare policy for mode id " + std::to_string(m));
  return policies_[m];
}

std::optional<ModeId> FareTable::find(std::string_view name) const {
  for (ModeId m = 0; m < names_.size(); ++m)
    if (names_[m] == name) return m;
  return std::nullopt;
}

namespace {

std::int64_t median_of(std::vector<std::int64_t> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  if (n % 2 == 1) return xs[n / 2];
  return (xs[n / 2 - 1] + xs[n / 2] + 1) / 2;
}

}  // namespace

FarePolicy FareTable::median_policy() const {
  if (policies_.empty()) throw ConfigError("median of an empty fare table");
  std::vector<std::int64_t> base, meter, minute;
  for (const auto& p : policies_) {
    base.push_back(p.base_fare.value());
    meter.push_back(p.cost_per_meter.raw());
    minute.push_back(p.cost_per_minute.raw());
  }
  return FarePolicy{Money(median_of(base)), Rate::from_raw(median_of(meter)),
                    Rate::from_raw(median_of(minute))};
}

FareTable FareTable::scaled(std::int64_t factor) const {
  FareTable out;
  for (ModeId m = 0; m < size(); ++m) {
    const auto& p = policies_[m];
    out.add_mode(names_[m],
                 FarePolicy{factor * p.base_fare,
                            Rate::from_raw(factor * p.cost_per_meter.raw()),
                            Rate::from_raw(factor * p.cost_per_minute.raw())});
  }
  return out;
}

// ------------------------------------------------------------- free helpers

double haversine_m(GeoPoint a, GeoPoint b) {
  constexpr double kEarthRadiusM = 6371000.0;
  constexpr double kRad = std::numbers::pi / 180.0;
  const double dlat = (b.lat - a.lat) * kRad;
  const double dlon = (b.lon - a.lon) * kRad;
  const double h = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(a.lat * kRad) * std::cos(b.lat * kRad) *
                       std::sin(dlon / 2) * std::sin(dlon / 2);
  return 2 * kEarthRadiusM * std::asin(std::min(1.0, std::sqrt(h)));
}

Money edge_cost(const TransitEdge& edge, const FareTable& fares) {
  if (!fares.contains(edge.mode)) {
    throw ConfigError("no fare policy for mode id " +
                      std::to_string(edge.mode));
  }
  const FarePolicy& p = fares.policy(edge.mode);
  // Hundredths of a cent.
  const long double variable =
      static_cast<long double>(p.cost_per_meter.raw()) * edge.distance_m +
      static_cast<long double>(p.cost_per_minute.raw()) * edge.time_min;
  const long double cents = variable / Rate::kUnitsPerCent;
  const auto rounded = static_cast<std::int64_t>(std::floor(cents + 0.5L + 1e-9L));
  return p.base_fare + Money(rounded);
}

// ----------------------------------------------------------- NetworkBuilder

NetworkBuilder::NetworkBuilder(FareTable fares) : fares_(std::move(fares)) {}

PoiId NetworkBuilder::add_poi(std::string external_id,
                              std::optional<GeoPoint> coords, std::string name,
                              std::optional<int> category) {
  if (by_external_.contains(external_id))
    throw PreconditionError("duplicate PoI id '" + external_id + "'");
  if (category && *category < 0)
    throw PreconditionError("negative category for PoI '" + external_id + "'");
  const PoiId id = pois_.size();
  by_external_.emplace(external_id, id);
  pois_.push_back(Poi{id, std::move(external_id), std::move(name), category,
                      coords});
  return id;
}

EdgeId NetworkBuilder::add_edge(PoiId u, PoiId v, ModeId mode,
                                double distance_m, double time_min) {
  if (u >= pois_.size() || v >= pois_.size())
    throw PreconditionError("edge endpoint out of range");
  if (u == v && !allow_self_loops_)
    throw PreconditionError("self-loop at PoI '" + pois_[u].external_id + "'");
  if (!fares_.contains(mode))
    throw ConfigError("no fare policy for mode id " + std::to_string(mode));
  if (!(distance_m >= 0.0) || !(time_min >= 0.0) || !std::isfinite(distance_m) ||
      !std::isfinite(time_min)) {
    throw PreconditionError("edge distance and time must be finite and >= 0");
  }
  edges_.push_back(TransitEdge{u, v, mode, distance_m, time_min});
  return edges_.size() - 1;
}

ModeId NetworkBuilder::mode(std::string_view name) const {
  if (auto m = fares_.find(name)) return *m;
  throw ConfigError("unknown mode '" + std::string(name) + "'");
}

std::optional<PoiId> NetworkBuilder::find_poi(
    std::string_view external_id) const {
  auto it = by_external_.find(std::string(external_id));
  if (it == by_external_.end()) return std::nullopt;
  return it->second;
}

MultiModalNetwork NetworkBuilder::finalize() && {
  MultiModalNetwork net;
  net.fares_ = std::move(fares_);
  net.pois_ = std::move(pois_);
  net.edges_ = std::move(edges_);
  net.by_external_ = std::move(by_external_);
  net.index();
  return net;
}

// -------------------------------------------------------- MultiModalNetwork

void MultiModalNetwork::index() {
  edge_costs_.clear();
  edge_costs_.reserve(edges_.size());
  for (const auto& e : edges_) edge_costs_.push_back(edge_cost(e, fares_));

  incident_.assign(pois_.size(), {});
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    incident_[edges_[id].u].push_back(id);
    if (edges_[id].v != edges_[id].u) incident_[edges_[id].v].push_back(id);
  }

  hops_.assign(pois_.size(), {});
  for (PoiId p = 0; p < pois_.size(); ++p) {
    auto& hops = hops_[p];
    for (EdgeId id : incident_[p]) {
      const auto& e = edges_[id];
      if (e.u == e.v) continue;
      const PoiId to = e.other(p);
      auto it = std::find_if(hops.begin(), hops.end(),
                             [to](const Hop& h) { return h.to == to; });
      if (it == hops.end()) {
        hops.push_back(Hop{to, id, edge_costs_[id]});
        continue;
      }
      // Edge ids ascend, so an equal (cost, mode) never displaces.
      const auto key = [&](EdgeId x) {
        return std::make_tuple(edge_costs_[x], edges_[x].mode, x);
      };
      if (key(id) < key(it->edge)) *it = Hop{to, id, edge_costs_[id]};
    }
    std::sort(hops.begin(), hops.end(),
              [](const Hop& a, const Hop& b) { return a.to < b.to; });
  }
}

std::optional<PoiId> MultiModalNetwork::find_poi(
    std::string_view external_id) const {
  auto it = by_external_.find(std::string(external_id));
  if (it == by_external_.end()) return std::nullopt;
  return it->second;
}

PoiId MultiModalNetwork::poi_id(std::string_view external_id) const {
  if (auto id = find_poi(external_id)) return *id;
  throw PreconditionError("unknown PoI '" + std::string(external_id) + "'");
}

MultiModalNetwork MultiModalNetwork::with_categories(
    const std::vector<std::optional<int>>& categories) const {
  if (categories.size() != pois_.size())
    throw PreconditionError("category vector size does not match PoI count");
  MultiModalNetwork out = *this;
  for (PoiId p = 0; p < pois_.size(); ++p) out.pois_[p].category = categories[p];
  return out;
}

MultiModalNetwork MultiModalNetwork::with_fares(FareTable fares) const {
  MultiModalNetwork out = *this;
  out.fares_ = std::move(fares);
  out.index();
  return out;
}

NetworkBuilder MultiModalNetwork::to_builder() const {
  NetworkBuilder b(fares_);
  b.allow_self_loops(true);
  for (const auto& p : pois_)
    b.add_poi(p.external_id, p.coords, p.name, p.category);
  for (const auto& e : edges_)
    b.add_edge(e.u, e.v, e.mode, e.distance_m, e.time_min);
  b.allow_self_loops(false);
  return b;
}

// ------------------------------------------------------------------ queries

std::optional<ParallelEdge> cheapest_parallel_edge(const MultiModalNetwork& net,
                                                   PoiId u, PoiId v) {
  if (u == v || !net.valid(u) || !net.valid(v)) return std::nullopt;
  const auto hops = net.hops(u);
  auto it = std::lower_bound(hops.begin(), hops.end(), v,
                             [](const Hop& h, PoiId x) { return h.to < x; });
  if (it == hops.end() || it->to != v) return std::nullopt;
  return ParallelEdge{it->edge, it->cost};
}

ShortestPathTree::ShortestPathTree(const MultiModalNetwork& net, PoiId source)
    : net_(&net),
      source_(source),
      cost_(net.poi_count(), Money::infinity()),
      parent_edge_(net.poi_count(), kNoId) {
  if (!net.valid(source)) throw PreconditionError("source PoI out of range");

  using Entry = std::pair<Money, PoiId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  std::vector<bool> settled(net.poi_count(), false);
  cost_[source] = Money(0);
  queue.emplace(Money(0), source);

  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (settled[u] || d > cost_[u]) continue;
    settled[u] = true;
    for (const Hop& h : net.hops(u)) {
      if (settled[h.to]) continue;
      const Money candidate = d + h.cost;
      if (candidate < cost_[h.to]) {
        cost_[h.to] = candidate;
        parent_edge_[h.to] = h.edge;
        queue.emplace(candidate, h.to);
      } else if (candidate == cost_[h.to] &&
                 u < net.edge(parent_edge_[h.to]).other(h.to)) {
        parent_edge_[h.to] = h.edge;
      }
    }
  }
}

std::optional<PathResult> ShortestPathTree::path_to(PoiId target) const {
  if (!net_->valid(target)) throw PreconditionError("target PoI out of range");
  if (!reachable(target)) return std::nullopt;
  PathResult out;
  out.cost = cost_[target];
  PoiId at = target;
  out.poi_sequence.push_back(at);
  while (at != source_) {
    const EdgeId e = parent_edge_[at];
    out.legs.push_back(Leg{e, net_->edge(e).mode});
    at = net_->edge(e).other(at);
    out.poi_sequence.push_back(at);
  }
  std::reverse(out.legs.begin(), out.legs.end());
  std::reverse(out.poi_sequence.begin(), out.poi_sequence.end());
  return out;
}

std::optional<PathResult> shortest_path(const MultiModalNetwork& net,
                                        PoiId source, PoiId target) {
  if (!net.valid(target)) throw PreconditionError("target PoI out of range");
  return ShortestPathTree(net, source).path_to(target);
}

std::vector<std::vector<PoiId>> connected_components(
    const MultiModalNetwork& net) {
  std::vector<std::vector<PoiId>> out;
  std::vector<bool> seen(net.poi_count(), false);
  std::vector<PoiId> stack;
  for (PoiId start = 0; start < net.poi_count(); ++start) {
    if (seen[start]) continue;
    auto& comp = out.emplace_back();
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const PoiId u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (EdgeId e : net.incident(u)) {
        const PoiId w = net.edge(e).other(u);
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
  }
  return out;
}

RepairResult connect_components(const MultiModalNetwork& net,
                                const RepairOptions& options) {
  if (net.poi_count() == 0)
    throw PreconditionError("cannot connect an empty network");
  if (!(options.speed_m_per_min > 0.0))
    throw ConfigError("repair speed must be positive");

  const auto comps = connected_components(net);
  if (comps.size() == 1) return RepairResult{net, {}, std::nullopt};
  if (net.fares().find(options.mode_name))
    throw ConfigError("repair mode '" + options.mode_name +
                      "' already exists in the fare table");

  const FarePolicy policy = options.policy
                                ? *options.policy
                                : (net.fares().empty()
                                       ? FarePolicy{}
                                       : net.fares().median_policy());
  NetworkBuilder builder = net.to_builder();
  const ModeId mode = builder.fares().add_mode(options.mode_name, policy);

  RepairResult out;
  out.repair_mode = mode;
  for (std::size_t i = 0; i + 1 < comps.size(); ++i) {
    const Poi& a = net.poi(comps[i].front());
    const Poi& b = net.poi(comps[i + 1].front());
    const double distance = a.coords && b.coords
                                ? haversine_m(*a.coords, *b.coords)
                                : options.default_distance_m;
    out.added_edges.push_back(builder.add_edge(
        a.id, b.id, mode, distance, distance / options.speed_m_per_min));
  }
  out.network = std::move(builder).finalize();
  return out;
}

}  // namespace gtpmm

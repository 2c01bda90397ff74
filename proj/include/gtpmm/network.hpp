#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gtpmm/money.hpp"

namespace gtpmm {

using PoiId = std::size_t;
using EdgeId = std::size_t;
using ModeId = std::size_t;

inline constexpr std::size_t kNoId = static_cast<std::size_t>(-1);

struct FarePolicy {
  Money base_fare;
  Rate cost_per_meter;
  Rate cost_per_minute;

  friend bool operator==(const FarePolicy&, const FarePolicy&) = default;
};

// Dense table of transport modes. Mode ids are 0..size()-1 in insertion
// order and names are unique.
class FareTable {
 public:
  ModeId add_mode(std::string name, FarePolicy policy);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  bool contains(ModeId m) const { return m < names_.size(); }

  const std::string& name(ModeId m) const;
  const FarePolicy& policy(ModeId m) const;
  std::optional<ModeId> find(std::string_view name) const;

  // Component-wise median of all policies. Throws ConfigError when empty.
  FarePolicy median_policy() const;

  // Every policy multiplied by an integer factor.
  FareTable scaled(std::int64_t factor) const;

  friend bool operator==(const FareTable&, const FareTable&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<FarePolicy> policies_;
};

struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

// Great-circle distance in meters on a sphere of radius 6371 km.
double haversine_m(GeoPoint a, GeoPoint b);

struct Poi {
  PoiId id = 0;
  std::string external_id;
  std::string name;
  std::optional<int> category;
  std::optional<GeoPoint> coords;

  friend bool operator==(const Poi&, const Poi&) = default;
};

struct TransitEdge {
  PoiId u = 0;
  PoiId v = 0;
  ModeId mode = 0;
  double distance_m = 0.0;
  double time_min = 0.0;

  PoiId other(PoiId from) const { return from == u ? v : u; }

  friend bool operator==(const TransitEdge&, const TransitEdge&) = default;
};

// base + per_minute * time + per_meter * distance, rounded half-up to cents.
// Throws ConfigError if the table has no policy for the edge's mode.
Money edge_cost(const TransitEdge& edge, const FareTable& fares);

struct Leg {
  EdgeId edge = 0;
  ModeId mode = 0;

  friend bool operator==(const Leg&, const Leg&) = default;
};

// A walk through the network. poi_sequence has legs.size() + 1 entries
// except for the empty path, which holds just the start PoI.
struct PathResult {
  Money cost;
  std::vector<Leg> legs;
  std::vector<PoiId> poi_sequence;

  PoiId front() const { return poi_sequence.front(); }
  PoiId back() const { return poi_sequence.back(); }
  bool empty() const { return legs.empty(); }

  friend bool operator==(const PathResult&, const PathResult&) = default;
};

class MultiModalNetwork;

// Accumulates PoIs and edges; finalize() freezes them into a network.
class NetworkBuilder {
 public:
  explicit NetworkBuilder(FareTable fares = {});

  PoiId add_poi(std::string external_id, std::optional<GeoPoint> coords = {},
                std::string name = {}, std::optional<int> category = {});
  EdgeId add_edge(PoiId u, PoiId v, ModeId mode, double distance_m,
                  double time_min);

  // Mode name lookup against the fare table; throws ConfigError if unknown.
  ModeId mode(std::string_view name) const;
  std::optional<PoiId> find_poi(std::string_view external_id) const;

  FareTable& fares() { return fares_; }
  std::size_t poi_count() const { return pois_.size(); }
  void allow_self_loops(bool allow) { allow_self_loops_ = allow; }

  MultiModalNetwork finalize() &&;

 private:
  FareTable fares_;
  std::vector<Poi> pois_;
  std::vector<TransitEdge> edges_;
  std::unordered_map<std::string, PoiId> by_external_;
  bool allow_self_loops_ = false;
};

// One collapsed hop: the cheapest parallel edge towards a neighbour.
struct Hop {
  PoiId to = 0;
  EdgeId edge = 0;
  Money cost;
};

// Immutable undirected multigraph with per-mode fares. Edge costs and the
// cheapest-parallel-edge adjacency are computed once at finalization.
class MultiModalNetwork {
 public:
  MultiModalNetwork() = default;

  std::size_t poi_count() const { return pois_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t mode_count() const { return fares_.size(); }

  const Poi& poi(PoiId id) const { return pois_.at(id); }
  std::span<const Poi> pois() const { return pois_; }
  const TransitEdge& edge(EdgeId id) const { return edges_.at(id); }
  std::span<const TransitEdge> edges() const { return edges_; }
  Money cost(EdgeId id) const { return edge_costs_.at(id); }
  const FareTable& fares() const { return fares_; }

  // Incident edge ids of a PoI, in ascending edge id order.
  std::span<const EdgeId> incident(PoiId id) const { return incident_.at(id); }
  // Cheapest hop to every distinct neighbour, sorted by neighbour id.
  std::span<const Hop> hops(PoiId id) const { return hops_.at(id); }

  std::optional<PoiId> find_poi(std::string_view external_id) const;
  // Like find_poi, but throws PreconditionError naming the id.
  PoiId poi_id(std::string_view external_id) const;

  bool valid(PoiId id) const { return id < pois_.size(); }

  // Same topology with every PoI category replaced.
  MultiModalNetwork with_categories(
      const std::vector<std::optional<int>>& categories) const;
  // Same topology and PoIs priced with a different fare table.
  MultiModalNetwork with_fares(FareTable fares) const;

  // Builder seeded with this network's contents, for derived networks.
  NetworkBuilder to_builder() const;

 private:
  friend class NetworkBuilder;

  void index();

  FareTable fares_;
  std::vector<Poi> pois_;
  std::vector<TransitEdge> edges_;
  std::vector<Money> edge_costs_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<std::vector<Hop>> hops_;
  std::unordered_map<std::string, PoiId> by_external_;
};

struct ParallelEdge {
  EdgeId edge = 0;
  Money cost;
};

// Cheapest edge among all parallel (u,v) edges; ties by lower mode id, then
// lower edge id. Absent when u == v or no edge joins them.
std::optional<ParallelEdge> cheapest_parallel_edge(const MultiModalNetwork& net,
                                                   PoiId u, PoiId v);

// Single-source Dijkstra over the collapsed hop graph. Settles PoIs in
// (cost, id) order; among equal-cost predecessors the lower PoI id wins.
class ShortestPathTree {
 public:
  ShortestPathTree(const MultiModalNetwork& net, PoiId source);

  PoiId source() const { return source_; }
  bool reachable(PoiId target) const {
    return !cost_.at(target).is_infinite();
  }
  Money cost(PoiId target) const { return cost_.at(target); }
  std::optional<PathResult> path_to(PoiId target) const;

 private:
  const MultiModalNetwork* net_;
  PoiId source_;
  std::vector<Money> cost_;
  std::vector<EdgeId> parent_edge_;
};

std::optional<PathResult> shortest_path(const MultiModalNetwork& net,
                                        PoiId source, PoiId target);

// Partition of all PoIs; each set sorted, sets ordered by smallest member.
std::vector<std::vector<PoiId>> connected_components(
    const MultiModalNetwork& net);

struct RepairOptions {
  std::string mode_name = "UN";
  // Defaults to the median of the network's fare policies.
  std::optional<FarePolicy> policy;
  double default_distance_m = 1000.0;
  double speed_m_per_min = 500.0;
};

struct RepairResult {
  MultiModalNetwork network;
  std::vector<EdgeId> added_edges;
  // Absent when the network was already connected and nothing was added.
  std::optional<ModeId> repair_mode;
};

// Joins consecutive components (ascending by lowest id) through their
// lowest-id PoIs using a fresh repair mode. A connected network is returned
// unchanged. Throws PreconditionError for an empty network and
// ConfigError if the mode name is already taken.
RepairResult connect_components(const MultiModalNetwork& net,
                                const RepairOptions& options = {});

}  // namespace gtpmm

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gtpmm/network.hpp"

namespace gtpmm {

// ------------------------------------------------------------------- fares

enum class FareStrategy { Low, Mid, High, SeededUniform };

std::string_view to_string(FareStrategy s);
// Accepts low, mid, high, seeded, seeded-uniform.
FareStrategy parse_fare_strategy(std::string_view text);

// Closed integer interval in fixed-point units.
struct FareRange {
  std::int64_t low = 0;
  std::int64_t high = 0;
};

// One mode's fare bounds. Base fare is in cents; rates are raw Rate units.
struct FareSpec {
  std::string mode;
  FareRange base_fare;
  FareRange cost_per_meter;
  FareRange cost_per_minute;
  std::optional<FareStrategy> strategy;
};

using FareConfig = std::vector<FareSpec>;

// CSV with header mode,base_fare,cost_per_meter,cost_per_minute,
// resolution_strategy. Amounts are major currency units; each is a scalar
// ("5.00", "~5.00") or a range ("2.50 - 4.00"). resolution_strategy may be
// empty. Throws ParseError with file and line.
FareConfig read_fare_config(std::istream& in, const std::string& name);
FareConfig load_fare_config(const std::filesystem::path& path);

// Picks a concrete policy per mode. A row's own strategy wins over
// `strategy`. seeded-uniform draws each component in config order.
// Throws ConfigError on an inverted range.
FareTable resolve_fares(const FareConfig& config, FareStrategy strategy,
                        std::uint64_t seed = 0);

// Fare bounds from the Swiss transit fare table (CHF).
FareConfig switzerland_fares();

// --------------------------------------------------------------- edge list

inline constexpr std::string_view kEdgeListHeader =
    "u,v,mode,distance_m,time_min";
inline constexpr std::string_view kPoiHeader =
    "id,external_id,name,lat,lon,category";

// Edge-list CSV (u and v are external PoI ids). When `pois` is given it
// defines every PoI first, in id order; otherwise PoIs are created on first
// appearance. Unknown modes, negative values and malformed rows throw
// ParseError naming the line.
MultiModalNetwork read_edge_list(std::istream& edges,
                                 const std::string& edges_name,
                                 const FareTable& fares,
                                 std::istream* pois = nullptr,
                                 const std::string& pois_name = {});
MultiModalNetwork load_edge_list(
    const std::filesystem::path& edges, const FareTable& fares,
    const std::optional<std::filesystem::path>& pois = std::nullopt);

void write_edge_list(const MultiModalNetwork& net, std::ostream& out);
void write_pois(const MultiModalNetwork& net, std::ostream& out);
void write_fare_table(const FareTable& fares, std::ostream& out);

// -------------------------------------------------------------------- GTFS

// Mode name for a GTFS route_type, basic or extended; absent if unmapped.
std::optional<std::string> mode_for_route_type(int route_type);

// Parses HH:MM:SS (hours may exceed 24) into minutes.
std::optional<double> parse_gtfs_time(std::string_view text);

struct GtfsStats {
  std::size_t hop_count = 0;     // consecutive stop pairs across all trips
  std::size_t merged_hops = 0;   // hops folded into an existing edge
};

// One PoI per stop; one edge per distinct (unordered stop pair, mode) with
// the minimum in-motion time seen; distance is great-circle. Every mode the
// feed uses must have a policy in `fares`.
MultiModalNetwork load_gtfs(const std::filesystem::path& directory,
                            const FareTable& fares,
                            GtfsStats* stats = nullptr);

// ------------------------------------------------------------- categorize

struct ByNameKeyword {
  // First matching keyword (case-insensitive substring) wins.
  std::vector<std::pair<std::string, int>> keywords;
};
struct SeededRandom {
  std::uint64_t seed = 0;
};
struct RoundRobin {};

struct CategoryConfig {
  int k = 1;
  std::variant<ByNameKeyword, SeededRandom, RoundRobin> strategy =
      RoundRobin{};
};

// The ten category labels used for the Swiss network, mapped to 0..9.
ByNameKeyword default_keyword_categories();

struct CategorizedNetwork {
  MultiModalNetwork network;
  std::vector<std::vector<PoiId>> categories;
};

// Assigns categories and returns the k sets (ascending ids). Throws
// PreconditionError if k < 1 or k exceeds the PoI count, ConfigError if a
// set ends up empty.
CategorizedNetwork categorize(const MultiModalNetwork& net,
                              const CategoryConfig& cfg);

}  // namespace gtpmm

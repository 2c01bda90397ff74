#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <tuple>
#include <unordered_map>

#include "gtpmm/csv.hpp"
#include "gtpmm/errors.hpp"
#include "gtpmm/ingest.hpp"

namespace gtpmm {

std::optional<std::string> mode_for_route_type(int t) {
  switch (t) {
    case 0: return "Tram";
    case 1: return "Subway";
    case 2: return "Train";
    case 3: return "Bus";
    case 4: return "Ferry";
    case 6: return "Gondola";
    case 7: return "Funicular";
    default: break;
  }
  // Extended route types.
  if (t >= 100 && t < 200) return "Train";
  if (t >= 200 && t < 300) return "Bus";  // coach
  if (t >= 400 && t < 500) return "Subway";
  if (t >= 700 && t < 800) return "Bus";
  if (t >= 900 && t < 1000) return "Tram";
  if (t >= 1000 && t < 1100) return "Ferry";
  if (t >= 1300 && t < 1400) return "Gondola";
  if (t >= 1400 && t < 1500) return "Funicular";
  return std::nullopt;
}

std::optional<double> parse_gtfs_time(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  int parts[3] = {0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    const auto colon = i < 2 ? text.find(':') : text.size();
    if (colon == std::string_view::npos || colon == 0) return std::nullopt;
    const auto piece = text.substr(0, colon);
    const auto [ptr, ec] =
        std::from_chars(piece.data(), piece.data() + piece.size(), parts[i]);
    if (ec != std::errc() || ptr != piece.data() + piece.size() || parts[i] < 0)
      return std::nullopt;
    text.remove_prefix(std::min(text.size(), colon + 1));
  }
  if (parts[1] > 59 || parts[2] > 59) return std::nullopt;
  return parts[0] * 60.0 + parts[1] + parts[2] / 60.0;
}

namespace {

struct StopTime {
  long sequence = 0;
  double arrival = 0;
  double departure = 0;
  PoiId stop = 0;
  std::size_t line = 0;
};

std::ifstream open_feed_file(const std::filesystem::path& dir,
                             const char* name) {
  const auto path = dir / name;
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "missing GTFS file");
  return in;
}

long parse_long(const CsvReader& csv, const std::string& text,
                std::string_view what) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    csv.fail("invalid " + std::string(what) + " '" + text + "'");
  return v;
}

}  // namespace

MultiModalNetwork load_gtfs(const std::filesystem::path& directory,
                            const FareTable& fares, GtfsStats* stats) {
  NetworkBuilder builder(fares);
  std::vector<GeoPoint> coords;
  std::vector<std::string> row;

  {
    auto in = open_feed_file(directory, "stops.txt");
    CsvReader csv(in, (directory / "stops.txt").string());
    const auto c_id = *csv.column("stop_id");
    const auto c_name = csv.column("stop_name", false);
    const auto c_lat = *csv.column("stop_lat");
    const auto c_lon = *csv.column("stop_lon");
    while (csv.next(row)) {
      if (row[c_id].empty()) csv.fail("empty stop_id");
      if (builder.find_poi(row[c_id]))
        csv.fail("duplicate stop_id '" + row[c_id] + "'");
      const GeoPoint at{parse_double(csv, row[c_lat], "stop_lat"),
                        parse_double(csv, row[c_lon], "stop_lon")};
      builder.add_poi(row[c_id], at, c_name ? row[*c_name] : std::string());
      coords.push_back(at);
    }
  }

  std::unordered_map<std::string, ModeId> route_mode;
  {
    auto in = open_feed_file(directory, "routes.txt");
    CsvReader csv(in, (directory / "routes.txt").string());
    const auto c_id = *csv.column("route_id");
    const auto c_type = *csv.column("route_type");
    while (csv.next(row)) {
      const long type = parse_long(csv, row[c_type], "route_type");
      const auto mode = mode_for_route_type(static_cast<int>(type));
      if (!mode) csv.fail("unsupported route_type " + row[c_type]);
      const auto id = fares.find(*mode);
      if (!id) csv.fail("no fare policy for mode '" + *mode + "'");
      route_mode[row[c_id]] = *id;
    }
  }

  std::unordered_map<std::string, ModeId> trip_mode;
  {
    auto in = open_feed_file(directory, "trips.txt");
    CsvReader csv(in, (directory / "trips.txt").string());
    const auto c_route = *csv.column("route_id");
    const auto c_trip = *csv.column("trip_id");
    while (csv.next(row)) {
      auto it = route_mode.find(row[c_route]);
      if (it == route_mode.end())
        csv.fail("unknown route_id '" + row[c_route] + "'");
      if (!trip_mode.emplace(row[c_trip], it->second).second)
        csv.fail("duplicate trip_id '" + row[c_trip] + "'");
    }
  }

  const auto stop_times_name = (directory / "stop_times.txt").string();
  std::vector<std::string> trip_order;
  std::unordered_map<std::string, std::vector<StopTime>> by_trip;
  {
    auto in = open_feed_file(directory, "stop_times.txt");
    CsvReader csv(in, stop_times_name);
    const auto c_trip = *csv.column("trip_id");
    const auto c_arr = *csv.column("arrival_time");
    const auto c_dep = *csv.column("departure_time");
    const auto c_stop = *csv.column("stop_id");
    const auto c_seq = *csv.column("stop_sequence");
    while (csv.next(row)) {
      if (!trip_mode.contains(row[c_trip]))
        csv.fail("unknown trip_id '" + row[c_trip] + "'");
      const auto stop = builder.find_poi(row[c_stop]);
      if (!stop) csv.fail("unknown stop_id '" + row[c_stop] + "'");
      const auto arr = parse_gtfs_time(row[c_arr]);
      const auto dep = parse_gtfs_time(row[c_dep]);
      if (!arr) csv.fail("invalid arrival_time '" + row[c_arr] + "'");
      if (!dep) csv.fail("invalid departure_time '" + row[c_dep] + "'");
      if (*dep < *arr) csv.fail("departure before arrival");
      auto [it, fresh] = by_trip.try_emplace(row[c_trip]);
      if (fresh) trip_order.push_back(row[c_trip]);
      it->second.push_back(StopTime{parse_long(csv, row[c_seq], "stop_sequence"),
                                    *arr, *dep, *stop, csv.line()});
    }
  }

  GtfsStats local;
  std::map<std::tuple<PoiId, PoiId, ModeId>, std::size_t> index;
  struct Pending {
    PoiId u, v;
    ModeId mode;
    double time;
  };
  std::vector<Pending> pending;

  for (const auto& trip : trip_order) {
    auto& times = by_trip[trip];
    std::stable_sort(times.begin(), times.end(),
                     [](const StopTime& a, const StopTime& b) {
                       return a.sequence < b.sequence;
                     });
    const ModeId mode = trip_mode.at(trip);
    for (std::size_t i = 1; i < times.size(); ++i) {
      const auto& prev = times[i - 1];
      const auto& cur = times[i];
      if (cur.sequence == prev.sequence)
        throw ParseError(stop_times_name, cur.line,
                         "repeated stop_sequence in trip '" + trip + "'");
      if (cur.arrival < prev.departure)
        throw ParseError(stop_times_name, cur.line,
                         "non-monotone stop_times in trip '" + trip + "'");
      if (cur.stop == prev.stop) continue;
      ++local.hop_count;
      const double time = cur.arrival - prev.departure;
      const auto key = std::make_tuple(std::min(prev.stop, cur.stop),
                                       std::max(prev.stop, cur.stop), mode);
      auto [it, fresh] = index.try_emplace(key, pending.size());
      if (fresh) {
        pending.push_back(Pending{prev.stop, cur.stop, mode, time});
      } else {
        ++local.merged_hops;
        pending[it->second].time = std::min(pending[it->second].time, time);
      }
    }
  }

  for (const auto& p : pending) {
    builder.add_edge(p.u, p.v, p.mode, haversine_m(coords[p.u], coords[p.v]),
                     p.time);
  }
  if (stats) *stats = local;
  return std::move(builder).finalize();
}

}  // namespace gtpmm

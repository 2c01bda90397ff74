#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "gtpmm/csv.hpp"
#include "gtpmm/errors.hpp"
#include "gtpmm/ingest.hpp"

namespace gtpmm {

namespace {

std::string join_header(const std::vector<std::string>& h) {
  std::string out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) out += ',';
    out += h[i];
  }
  return out;
}

void read_pois(std::istream& in, const std::string& name,
               NetworkBuilder& builder) {
  CsvReader csv(in, name);
  if (join_header(csv.header()) != kPoiHeader)
    throw ParseError(name, 1,
                     "header must be '" + std::string(kPoiHeader) + "'");
  std::vector<std::string> row;
  while (csv.next(row)) {
    const double id = parse_double(csv, row[0], "id");
    if (id != static_cast<double>(builder.poi_count()))
      csv.fail("PoI ids must be dense and in order");
    if (row[1].empty()) csv.fail("empty external_id");
    std::optional<GeoPoint> coords;
    if (!row[3].empty() || !row[4].empty())
      coords = GeoPoint{parse_double(csv, row[3], "lat"),
                        parse_double(csv, row[4], "lon")};
    std::optional<int> category;
    if (!row[5].empty()) {
      const double c = parse_double(csv, row[5], "category");
      if (c < 0 || c != static_cast<int>(c)) csv.fail("invalid category");
      category = static_cast<int>(c);
    }
    if (builder.find_poi(row[1])) csv.fail("duplicate PoI '" + row[1] + "'");
    builder.add_poi(row[1], coords, row[2], category);
  }
}

std::string format_double(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

}  // namespace

MultiModalNetwork read_edge_list(std::istream& edges,
                                 const std::string& edges_name,
                                 const FareTable& fares, std::istream* pois,
                                 const std::string& pois_name) {
  NetworkBuilder builder(fares);
  if (pois) read_pois(*pois, pois_name, builder);
  const bool fixed_pois = pois != nullptr;

  CsvReader csv(edges, edges_name);
  if (join_header(csv.header()) != kEdgeListHeader)
    throw ParseError(edges_name, 1,
                     "header must be '" + std::string(kEdgeListHeader) + "'");
  std::vector<std::string> row;
  while (csv.next(row)) {
    const auto resolve = [&](const std::string& ext) {
      if (ext.empty()) csv.fail("empty PoI id");
      if (auto id = builder.find_poi(ext)) return *id;
      if (fixed_pois) csv.fail("PoI '" + ext + "' not in the PoI file");
      return builder.add_poi(ext);
    };
    const PoiId u = resolve(row[0]);
    const PoiId v = resolve(row[1]);
    if (u == v) csv.fail("self-loop at PoI '" + row[0] + "'");
    const auto mode = fares.find(row[2]);
    if (!mode) csv.fail("unknown mode '" + row[2] + "'");
    const double distance = parse_double(csv, row[3], "distance_m");
    const double time = parse_double(csv, row[4], "time_min");
    if (distance < 0) csv.fail("negative distance");
    if (time < 0) csv.fail("negative time");
    builder.add_edge(u, v, *mode, distance, time);
  }
  return std::move(builder).finalize();
}

MultiModalNetwork load_edge_list(
    const std::filesystem::path& edges, const FareTable& fares,
    const std::optional<std::filesystem::path>& pois) {
  std::ifstream e(edges);
  if (!e) throw ParseError(edges.string(), 0, "cannot open edge list");
  if (!pois) return read_edge_list(e, edges.string(), fares);
  std::ifstream p(*pois);
  if (!p) throw ParseError(pois->string(), 0, "cannot open PoI file");
  return read_edge_list(e, edges.string(), fares, &p, pois->string());
}

void write_edge_list(const MultiModalNetwork& net, std::ostream& out) {
  out << kEdgeListHeader << '\n';
  for (const auto& e : net.edges()) {
    out << csv_escape(net.poi(e.u).external_id) << ','
        << csv_escape(net.poi(e.v).external_id) << ','
        << csv_escape(net.fares().name(e.mode)) << ','
        << format_double(e.distance_m) << ',' << format_double(e.time_min)
        << '\n';
  }
}

void write_pois(const MultiModalNetwork& net, std::ostream& out) {
  out << kPoiHeader << '\n';
  for (const auto& p : net.pois()) {
    out << p.id << ',' << csv_escape(p.external_id) << ','
        << csv_escape(p.name) << ',';
    if (p.coords)
      out << format_double(p.coords->lat) << ',' << format_double(p.coords->lon);
    else
      out << ',';
    out << ',';
    if (p.category) out << *p.category;
    out << '\n';
  }
}

}  // namespace gtpmm

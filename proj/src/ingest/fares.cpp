#include <fstream>
#include <ostream>

#include "gtpmm/csv.hpp"
#include "gtpmm/errors.hpp"
#include "gtpmm/ingest.hpp"
#include "gtpmm/rng.hpp"

namespace gtpmm {

std::string_view to_string(FareStrategy s) {
  switch (s) {
    case FareStrategy::Low: return "low";
    case FareStrategy::Mid: return "mid";
    case FareStrategy::High: return "high";
    case FareStrategy::SeededUniform: return "seeded-uniform";
  }
  return "?";
}

FareStrategy parse_fare_strategy(std::string_view text) {
  if (text == "low") return FareStrategy::Low;
  if (text == "mid") return FareStrategy::Mid;
  if (text == "high") return FareStrategy::High;
  if (text == "seeded" || text == "seeded-uniform")
    return FareStrategy::SeededUniform;
  throw ConfigError("unknown fare strategy '" + std::string(text) + "'");
}

namespace {

FareRange parse_range(std::string text, int decimals) {
  std::erase(text, '~');
  const auto dash = text.find('-');
  if (dash == std::string::npos) {
    const auto v = parse_fixed_point(text, decimals);
    return {v, v};
  }
  return {parse_fixed_point(text.substr(0, dash), decimals),
          parse_fixed_point(text.substr(dash + 1), decimals)};
}

std::int64_t pick(FareRange r, FareStrategy s, SplitMix64& rng,
                  const std::string& mode, std::string_view what) {
  if (r.low > r.high)
    throw ConfigError("inverted " + std::string(what) + " range for mode '" +
                      mode + "'");
  switch (s) {
    case FareStrategy::Low: return r.low;
    case FareStrategy::High: return r.high;
    case FareStrategy::Mid: return (r.low + r.high + 1) / 2;
    case FareStrategy::SeededUniform:
      return r.low + static_cast<std::int64_t>(rng.uniform(
                         static_cast<std::uint64_t>(r.high - r.low) + 1));
  }
  return r.low;
}

std::string format_fixed(std::int64_t v, int decimals) {
  std::int64_t scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  std::string frac = std::to_string(v % scale);
  while (static_cast<int>(frac.size()) < decimals) frac.insert(0, "0");
  return std::to_string(v / scale) + "." + frac;
}

}  // namespace

FareConfig read_fare_config(std::istream& in, const std::string& name) {
  CsvReader csv(in, name);
  const auto c_mode = *csv.column("mode");
  const auto c_base = *csv.column("base_fare");
  const auto c_meter = *csv.column("cost_per_meter");
  const auto c_minute = *csv.column("cost_per_minute");
  const auto c_strategy = csv.column("resolution_strategy", false);

  FareConfig out;
  std::vector<std::string> row;
  while (csv.next(row)) {
    FareSpec spec;
    spec.mode = row[c_mode];
    if (spec.mode.empty()) csv.fail("empty mode name");
    try {
      spec.base_fare = parse_range(row[c_base], 2);
      spec.cost_per_meter = parse_range(row[c_meter], 4);
      spec.cost_per_minute = parse_range(row[c_minute], 4);
      if (c_strategy && !row[*c_strategy].empty())
        spec.strategy = parse_fare_strategy(row[*c_strategy]);
    } catch (const ConfigError& e) {
      csv.fail(e.what());
    }
    for (const auto& prev : out)
      if (prev.mode == spec.mode) csv.fail("duplicate mode '" + spec.mode + "'");
    out.push_back(std::move(spec));
  }
  return out;
}

FareConfig load_fare_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open fare config");
  return read_fare_config(in, path.string());
}

FareTable resolve_fares(const FareConfig& config, FareStrategy strategy,
                        std::uint64_t seed) {
  SplitMix64 rng(seed);
  FareTable table;
  for (const auto& spec : config) {
    const FareStrategy s = spec.strategy.value_or(strategy);
    FarePolicy p;
    p.base_fare = Money(pick(spec.base_fare, s, rng, spec.mode, "base fare"));
    p.cost_per_meter =
        Rate::from_raw(pick(spec.cost_per_meter, s, rng, spec.mode,
                            "cost per meter"));
    p.cost_per_minute =
        Rate::from_raw(pick(spec.cost_per_minute, s, rng, spec.mode,
                            "cost per minute"));
    table.add_mode(spec.mode, p);
  }
  return table;
}

FareConfig switzerland_fares() {
  // mode, base (cents), per meter and per minute (1e-4 CHF).
  const auto row = [](std::string mode, FareRange base, FareRange meter,
                      FareRange minute) {
    return FareSpec{std::move(mode), base, meter, minute, std::nullopt};
  };
  return {
      row("Bus", {250, 400}, {100, 300}, {500, 1000}),
      row("Tram", {250, 400}, {100, 300}, {500, 1000}),
      row("Train", {500, 500}, {300, 500}, {1000, 1500}),
      row("Ferry", {500, 1000}, {500, 1000}, {1500, 2500}),
      row("Funicular", {130, 500}, {200, 400}, {1000, 1500}),
      row("Gondola", {500, 1500}, {500, 1500}, {2000, 5000}),
      row("Subway", {250, 400}, {100, 300}, {500, 1000}),
  };
}

void write_fare_table(const FareTable& fares, std::ostream& out) {
  out << "mode,base_fare,cost_per_meter,cost_per_minute,resolution_strategy\n";
  for (ModeId m = 0; m < fares.size(); ++m) {
    const auto& p = fares.policy(m);
    out << csv_escape(fares.name(m)) << ',' << format_fixed(p.base_fare.value(), 2)
        << ',' << format_fixed(p.cost_per_meter.raw(), 4) << ','
        << format_fixed(p.cost_per_minute.raw(), 4) << ",\n";
  }
}

}  // namespace gtpmm

#include <algorithm>
#include <cctype>
#include <string>

#include "gtpmm/errors.hpp"
#include "gtpmm/ingest.hpp"
#include "gtpmm/rng.hpp"

namespace gtpmm {

ByNameKeyword default_keyword_categories() {
  const char* labels[] = {"Train Station", "Public Square", "City Center",
                          "Bridge",        "School",        "Park",
                          "Bus Stop",      "Airport",       "Healthcare Facility",
                          "Hotel"};
  ByNameKeyword out;
  for (int i = 0; i < 10; ++i) out.keywords.emplace_back(labels[i], i);
  return out;
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

CategorizedNetwork categorize(const MultiModalNetwork& net,
                              const CategoryConfig& cfg) {
  if (cfg.k < 1) throw PreconditionError("category count must be >= 1");
  if (static_cast<std::size_t>(cfg.k) > net.poi_count())
    throw PreconditionError("category count exceeds the number of PoIs");

  std::vector<std::optional<int>> assigned(net.poi_count());
  if (const auto* kw = std::get_if<ByNameKeyword>(&cfg.strategy)) {
    std::vector<std::pair<std::string, int>> keys;
    for (const auto& [word, cat] : kw->keywords) {
      if (cat < 0 || cat >= cfg.k)
        throw ConfigError("keyword '" + word + "' maps outside 0..k-1");
      keys.emplace_back(lower(word), cat);
    }
    for (const auto& p : net.pois()) {
      const auto name = lower(p.name);
      for (const auto& [word, cat] : keys) {
        if (name.find(word) != std::string::npos) {
          assigned[p.id] = cat;
          break;
        }
      }
    }
  } else if (const auto* rnd = std::get_if<SeededRandom>(&cfg.strategy)) {
    SplitMix64 rng(rnd->seed);
    for (auto& a : assigned)
      a = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(cfg.k)));
  } else {
    for (PoiId p = 0; p < assigned.size(); ++p)
      assigned[p] = static_cast<int>(p % static_cast<std::size_t>(cfg.k));
  }

  CategorizedNetwork out{net.with_categories(assigned),
                         std::vector<std::vector<PoiId>>(cfg.k)};
  for (PoiId p = 0; p < assigned.size(); ++p)
    if (assigned[p]) out.categories[*assigned[p]].push_back(p);
  for (int c = 0; c < cfg.k; ++c)
    if (out.categories[c].empty())
      throw ConfigError("category " + std::to_string(c) +
                        " is empty after categorization");
  return out;
}

}  // namespace gtpmm

#include "gtpmm/oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "gtpmm/errors.hpp"

namespace gtpmm {

ValidPathIterator::ValidPathIterator(const QueryInstance& inst)
    : sorted_(inst.categories), index_(inst.categories.size(), 0) {
  if (sorted_.empty()) throw PreconditionError("no categories to enumerate");
  for (std::size_t c = 0; c < sorted_.size(); ++c) {
    if (sorted_[c].empty())
      throw PreconditionError("category " + std::to_string(c) + " is empty");
    std::sort(sorted_[c].begin(), sorted_[c].end());
    sorted_[c].erase(std::unique(sorted_[c].begin(), sorted_[c].end()),
                     sorted_[c].end());
    const std::uint64_t n = sorted_[c].size();
    size_ = size_ > UINT64_MAX / n ? UINT64_MAX : size_ * n;
    current_.push_back(sorted_[c].front());
  }
}

void ValidPathIterator::advance() {
  for (std::size_t c = sorted_.size(); c-- > 0;) {
    if (++index_[c] < sorted_[c].size()) {
      current_[c] = sorted_[c][index_[c]];
      return;
    }
    index_[c] = 0;
    current_[c] = sorted_[c].front();
  }
  done_ = true;
}

ValidPathIterator enumerate_valid_paths(const QueryInstance& inst,
                                        std::uint64_t limit) {
  ValidPathIterator it(inst);
  if (it.size() > limit) {
    throw GuardError("refusing to enumerate " +
                     (it.size() == UINT64_MAX ? std::string(">= 2^64")
                                              : std::to_string(it.size())) +
                     " valid paths (limit " + std::to_string(limit) + ")");
  }
  return it;
}

namespace {

// Pairwise cheapest costs, computed straight from shortest_path() so the
// oracle does not share the planner's caching layer.
class PairCosts {
 public:
  explicit PairCosts(const MultiModalNetwork& net) : net_(net) {}

  Money operator()(PoiId a, PoiId b) {
    const auto key = std::make_pair(a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const auto path = shortest_path(net_, a, b);
    if (!path)
      throw InfeasibleError(a, b,
                            "no path between PoI '" + net_.poi(a).external_id +
                                "' and '" + net_.poi(b).external_id + "'");
    memo_.emplace(key, path->cost);
    memo_.emplace(std::make_pair(b, a), path->cost);
    return path->cost;
  }

 private:
  const MultiModalNetwork& net_;
  std::map<std::pair<PoiId, PoiId>, Money> memo_;
};

struct Parts {
  Money sources;
  Money common;
  Money destinations;
};

Parts evaluate(PairCosts& sp, const QueryInstance& inst,
               const std::vector<PoiId>& tuple) {
  Parts p;
  for (const auto& a : inst.agents) p.sources += sp(a.source, tuple.front());
  for (std::size_t c = 0; c + 1 < tuple.size(); ++c)
    p.common += sp(tuple[c], tuple[c + 1]);
  for (const auto& a : inst.agents)
    p.destinations += sp(tuple.back(), a.destination);
  return p;
}

}  // namespace

Money aggregated_distance(const MultiModalNetwork& net,
                          const QueryInstance& inst,
                          const std::vector<PoiId>& common_pois) {
  inst.validate(net);
  if (common_pois.size() != inst.categories.size())
    throw PreconditionError("tuple length does not match category count");
  PairCosts sp(net);
  const Parts p = evaluate(sp, inst, common_pois);
  return p.sources + p.common + p.destinations;
}

OracleResult brute_force_optimal(const MultiModalNetwork& net,
                                 const QueryInstance& inst,
                                 SharingMode sharing, std::uint64_t limit) {
  inst.validate(net);
  auto it = enumerate_valid_paths(inst, limit);
  const std::int64_t m =
      sharing == SharingMode::SharedIntermediate
          ? 1
          : static_cast<std::int64_t>(inst.agents.size());
  PairCosts sp(net);
  OracleResult best{{}, Money::infinity(), 0};
  std::optional<InfeasibleError> first_failure;
  for (; !it.done(); it.advance()) {
    Parts p;
    try {
      p = evaluate(sp, inst, it.current());
    } catch (const InfeasibleError& e) {
      if (!first_failure) first_failure.emplace(e);
      continue;
    }
    const Money total = p.sources + m * p.common + p.destinations;
    ++best.evaluated;
    // Lexicographic order of iteration makes strict < the tie rule.
    if (total < best.cost) {
      best.cost = total;
      best.common_pois = it.current();
    }
  }
  if (best.cost.is_infinite() && first_failure) throw *first_failure;
  return best;
}

}  // namespace gtpmm

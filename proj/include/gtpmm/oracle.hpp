#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gtpmm/network.hpp"
#include "gtpmm/planner.hpp"

namespace gtpmm {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000'000;

// Cursor over V_1 x ... x V_k in lexicographic PoI-id order (each category
// is iterated in ascending id order regardless of how it was given).
class ValidPathIterator {
 public:
  explicit ValidPathIterator(const QueryInstance& inst);

  // Number of tuples, saturating at UINT64_MAX.
  std::uint64_t size() const { return size_; }
  bool done() const { return done_; }
  const std::vector<PoiId>& current() const { return current_; }
  void advance();

 private:
  std::vector<std::vector<PoiId>> sorted_;
  std::vector<std::size_t> index_;
  std::vector<PoiId> current_;
  std::uint64_t size_ = 1;
  bool done_ = false;
};

// Throws PreconditionError on an empty category and GuardError when the
// product of category sizes exceeds `limit`.
ValidPathIterator enumerate_valid_paths(
    const QueryInstance& inst,
    std::uint64_t limit = kDefaultEnumerationLimit);

// Sum of cheapest-cost distances along every agent's valid path, counting
// the common part once.
Money aggregated_distance(const MultiModalNetwork& net,
                          const QueryInstance& inst,
                          const std::vector<PoiId>& common_pois);

struct OracleResult {
  std::vector<PoiId> common_pois;
  Money cost;
  std::uint64_t evaluated = 0;
};

// Exhaustive minimum over all valid paths. Ties go to the lexicographically
// smallest tuple.
OracleResult brute_force_optimal(
    const MultiModalNetwork& net, const QueryInstance& inst,
    SharingMode sharing, std::uint64_t limit = kDefaultEnumerationLimit);

}  // namespace gtpmm

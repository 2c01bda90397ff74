#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gtpmm/network.hpp"
#include "gtpmm/planner.hpp"

namespace gtpmm {

// Minutes since midnight; may exceed 1440 for service past midnight.
using Minutes = double;

struct Trip {
  std::vector<PoiId> route;
  ModeId mode = 0;
  Minutes start_time = 0;
  Minutes end_time = 0;
};

class Timetable {
 public:
  Timetable() = default;
  // Throws PreconditionError if any trip has start > end or < 2 stops.
  explicit Timetable(std::vector<Trip> trips);

  std::span<const Trip> trips() const { return trips_; }

 private:
  std::vector<Trip> trips_;
};

// A maximal run of consecutive same-mode hops; one vehicle has to cover it.
struct Ride {
  ModeId mode = 0;
  std::vector<PoiId> pois;
};

// Splits a journey (legs in travel order) into rides.
std::vector<Ride> split_rides(const MultiModalNetwork& net,
                              std::span<const PathResult* const> legs);

struct TimingReport {
  enum class Reason { None, NoCoveringTrip, NoTripAfterPrevious };

  bool feasible = true;
  // Location of the first violation; only meaningful when infeasible.
  std::optional<std::size_t> agent;
  std::size_t ride = 0;
  Reason reason = Reason::None;
  std::string message;
  // Trip index chosen for each ride of the last checked journey.
  std::vector<std::size_t> assignment;
};

// Checks one journey: every ride needs a trip of its mode whose route
// contains the ride's PoIs contiguously in order. The first trip starts at or
// after start_time and each later trip starts strictly after the previous
// one ends. Trips are chosen greedily by earliest end time.
TimingReport validate_journey(const MultiModalNetwork& net,
                              std::span<const PathResult* const> legs,
                              const Timetable& timetable, Minutes start_time);

// Checks every agent's full journey; reports the first violation.
TimingReport validate_timing(const MultiModalNetwork& net,
                             const JourneyPlan& plan,
                             const Timetable& timetable, Minutes start_time);

}  // namespace gtpmm

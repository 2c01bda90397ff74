#include "gtpmm/timetable.hpp"

#include <algorithm>

#include "gtpmm/errors.hpp"

namespace gtpmm {

Timetable::Timetable(std::vector<Trip> trips) : trips_(std::move(trips)) {
  for (std::size_t t = 0; t < trips_.size(); ++t) {
    if (trips_[t].route.size() < 2)
      throw PreconditionError("trip " + std::to_string(t) +
                              " has fewer than two stops");
    if (trips_[t].start_time > trips_[t].end_time)
      throw PreconditionError("trip " + std::to_string(t) +
                              " starts after it ends");
  }
}

std::vector<Ride> split_rides(const MultiModalNetwork& net,
                              std::span<const PathResult* const> legs) {
  std::vector<Ride> rides;
  for (const PathResult* leg : legs) {
    for (std::size_t h = 0; h < leg->legs.size(); ++h) {
      const ModeId mode = net.edge(leg->legs[h].edge).mode;
      const PoiId from = leg->poi_sequence[h];
      const PoiId to = leg->poi_sequence[h + 1];
      if (rides.empty() || rides.back().mode != mode ||
          rides.back().pois.back() != from) {
        rides.push_back(Ride{mode, {from}});
      }
      rides.back().pois.push_back(to);
    }
  }
  return rides;
}

namespace {

bool covers(const Trip& trip, const Ride& ride) {
  if (trip.mode != ride.mode) return false;
  return std::search(trip.route.begin(), trip.route.end(), ride.pois.begin(),
                     ride.pois.end()) != trip.route.end();
}

}  // namespace

TimingReport validate_journey(const MultiModalNetwork& net,
                              std::span<const PathResult* const> legs,
                              const Timetable& timetable, Minutes start_time) {
  TimingReport report;
  const auto rides = split_rides(net, legs);
  const auto trips = timetable.trips();
  std::optional<Minutes> previous_end;

  for (std::size_t r = 0; r < rides.size(); ++r) {
    std::optional<std::size_t> chosen;
    bool any_cover = false;
    for (std::size_t t = 0; t < trips.size(); ++t) {
      if (!covers(trips[t], rides[r])) continue;
      any_cover = true;
      const bool on_time = previous_end ? trips[t].start_time > *previous_end
                                        : trips[t].start_time >= start_time;
      if (!on_time) continue;
      if (!chosen || trips[t].end_time < trips[*chosen].end_time) chosen = t;
    }
    if (!chosen) {
      report.feasible = false;
      report.ride = r;
      report.reason = any_cover ? TimingReport::Reason::NoTripAfterPrevious
                                : TimingReport::Reason::NoCoveringTrip;
      report.message =
          "ride " + std::to_string(r) + " (" + net.fares().name(rides[r].mode) +
          " from '" + net.poi(rides[r].pois.front()).external_id + "' to '" +
          net.poi(rides[r].pois.back()).external_id + "'): " +
          (any_cover ? "no trip departs in time" : "no trip covers it");
      return report;
    }
    report.assignment.push_back(*chosen);
    previous_end = trips[*chosen].end_time;
  }
  return report;
}

TimingReport validate_timing(const MultiModalNetwork& net,
                             const JourneyPlan& plan,
                             const Timetable& timetable, Minutes start_time) {
  TimingReport last;
  for (std::size_t a = 0; a < plan.agent_count(); ++a) {
    const auto journey = plan.agent_journey(a);
    last = validate_journey(net, journey, timetable, start_time);
    if (!last.feasible) {
      last.agent = a;
      last.message = "agent " + std::to_string(a) + ": " + last.message;
      return last;
    }
  }
  return last;
}

}  // namespace gtpmm

#pragma once

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "standby/dates.hpp"

namespace standby {

struct Stop {
  std::string stop_id;
  std::string name;
  double lat = 0;  // degrees WGS84
  double lon = 0;
};

enum class Direction { Inbound, Outbound };

const char* to_string(Direction d);
Direction direction_from_string(const std::string& s);

struct RouteDirection {
  std::string route_id;
  Direction direction = Direction::Outbound;

  bool operator==(const RouteDirection&) const = default;
  bool operator<(const RouteDirection& o) const {
    return route_id != o.route_id ? route_id < o.route_id : direction < o.direction;
  }
  std::string key() const { return route_id + ":" + to_string(direction); }
};

struct StopTime {
  std::string stop_id;
  int arrival_s = 0;  // seconds since midnight
  int departure_s = 0;
};

struct Trip {
  std::string trip_id;
  RouteDirection route_direction;
  std::vector<StopTime> stop_times;
  Date service_date;
  std::string vehicle_id;  // regular bus assigned to the trip
  std::string block_id;    // vehicle work-piece grouping

  int start_s() const { return stop_times.front().arrival_s; }
  int end_s() const { return stop_times.back().departure_s; }
  /// Boarding eligibility key: same block, route and direction.
  std::string service_key() const { return block_id + "|" + route_direction.key(); }
};

/// Static one-day transit network. Immutable after load/finalize; safe to
/// share across concurrent simulation workers.
class Schedule {
 public:
  std::vector<Stop> stops;
  std::vector<RouteDirection> route_directions;
  std::vector<Trip> trips;

  std::string depot;  // main garage stop
  std::string hub;    // central hub stop
  std::vector<std::string> candidate_stationing_stops;
  int bus_capacity = 40;
  double detour_factor = 1.3;
  double speed_mph = 20.0;
  std::vector<std::string> agency_plan;  // optional configured stationing

  /// Builds lookup indexes and checks every invariant. Call once after
  /// populating the tables; loading does this automatically.
  void finalize();

  const Stop* find_stop(const std::string& id) const;
  const Stop& stop(const std::string& id) const;  // UnknownStop
  const Trip* find_trip(const std::string& id) const;
  bool has_route_direction(const RouteDirection& rd) const;

 private:
  std::unordered_map<std::string, std::size_t> stop_index_;
  std::unordered_map<std::string, std::size_t> trip_index_;
};

struct TravelCost {
  double minutes = 0;
  double miles = 0;
};

/// Deadhead travel model: haversine distance scaled by the network detour
/// factor, at constant deadhead speed. Symmetric, zero on the diagonal.
TravelCost travel_time_and_distance(const Schedule& schedule, const std::string& from,
                                    const std::string& to);

/// Reads stops.csv, route_directions.csv, trips.csv, stop_times.csv and
/// network.json from `dir` and returns a validated Schedule.
Schedule load_schedule(const std::filesystem::path& dir);

/// Inverse of load_schedule; written files reload to an identical Schedule.
void save_schedule(const Schedule& schedule, const std::filesystem::path& dir);

}  // namespace standby

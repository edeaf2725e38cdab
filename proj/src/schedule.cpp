#include "standby/schedule.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <set>

#include "nlohmann/json.hpp"
#include "standby/csv.hpp"
#include "standby/error.hpp"
#include "standby/geo.hpp"

namespace standby {

using nlohmann::json;

const char* to_string(Direction d) { return d == Direction::Inbound ? "inbound" : "outbound"; }

Direction direction_from_string(const std::string& s) {
  if (s == "inbound") return Direction::Inbound;
  if (s == "outbound") return Direction::Outbound;
  raise(Errc::MalformedRow, "bad direction '" + s + "'");
}

void Schedule::finalize() {
  stop_index_.clear();
  trip_index_.clear();

  for (std::size_t i = 0; i < stops.size(); ++i) {
    const Stop& s = stops[i];
    if (!stop_index_.emplace(s.stop_id, i).second)
      raise(Errc::MalformedRow, "duplicate stop_id '" + s.stop_id + "'");
    if (s.lat < -90 || s.lat > 90 || s.lon < -180 || s.lon > 180)
      raise(Errc::MalformedRow, "stop '" + s.stop_id + "' has out-of-range coordinates");
  }

  std::set<RouteDirection> rds;
  for (const auto& rd : route_directions)
    if (!rds.insert(rd).second)
      raise(Errc::MalformedRow, "duplicate route_direction " + rd.key());

  for (std::size_t i = 0; i < trips.size(); ++i) {
    const Trip& t = trips[i];
    if (!trip_index_.emplace(t.trip_id, i).second)
      raise(Errc::MalformedRow, "duplicate trip_id '" + t.trip_id + "'");
    if (!rds.count(t.route_direction))
      raise(Errc::DanglingReference, t.route_direction.key() + " (trip " + t.trip_id + ")");
    if (t.stop_times.empty())
      raise(Errc::MalformedRow, "trip '" + t.trip_id + "' has no stop times");
    int prev_arrival = -1;
    for (const StopTime& st : t.stop_times) {
      if (!stop_index_.count(st.stop_id)) raise(Errc::DanglingReference, st.stop_id);
      if (st.arrival_s <= prev_arrival) raise(Errc::NonMonotoneStopTimes, t.trip_id);
      if (st.departure_s < st.arrival_s) raise(Errc::NonMonotoneStopTimes, t.trip_id);
      prev_arrival = st.arrival_s;
    }
  }

  auto require_stop = [&](const std::string& id, const char* what) {
    if (!stop_index_.count(id))
      raise(Errc::DanglingReference, std::string(what) + " '" + id + "'");
  };
  require_stop(depot, "depot");
  require_stop(hub, "hub");
  std::set<std::string> cand;
  for (const auto& c : candidate_stationing_stops) {
    require_stop(c, "candidate stop");
    if (!cand.insert(c).second)
      raise(Errc::MalformedRow, "duplicate candidate stop '" + c + "'");
  }
  for (const auto& a : agency_plan) require_stop(a, "agency plan stop");
  if (bus_capacity < 1) raise(Errc::MalformedRow, "bus_capacity must be >= 1");
  if (detour_factor <= 0 || speed_mph <= 0)
    raise(Errc::MalformedRow, "detour_factor and speed_mph must be positive");
}

const Stop* Schedule::find_stop(const std::string& id) const {
  auto it = stop_index_.find(id);
  return it == stop_index_.end() ? nullptr : &stops[it->second];
}

const Stop& Schedule::stop(const std::string& id) const {
  const Stop* s = find_stop(id);
  if (!s) raise(Errc::UnknownStop, id);
  return *s;
}

const Trip* Schedule::find_trip(const std::string& id) const {
  auto it = trip_index_.find(id);
  return it == trip_index_.end() ? nullptr : &trips[it->second];
}

bool Schedule::has_route_direction(const RouteDirection& rd) const {
  return std::find(route_directions.begin(), route_directions.end(), rd) !=
         route_directions.end();
}

TravelCost travel_time_and_distance(const Schedule& schedule, const std::string& from,
                                    const std::string& to) {
  if (from == to) {
    schedule.stop(from);
    return {0.0, 0.0};
  }
  const Stop& a = schedule.stop(from);
  const Stop& b = schedule.stop(to);
  const double km = haversine_km(a.lat, a.lon, b.lat, b.lon);
  const double miles = km * kMilesPerKm * schedule.detour_factor;
  return {miles / schedule.speed_mph * 60.0, miles};
}

namespace {

std::string fmt_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*g", 17, v);
  return buf;
}

}  // namespace

Schedule load_schedule(const std::filesystem::path& dir) {
  Schedule sched;

  CsvTable stops = read_csv(dir / "stops.csv");
  {
    auto id = stops.col("stop_id"), name = stops.col("name");
    auto lat = stops.col("lat"), lon = stops.col("lon");
    for (std::size_t r = 0; r < stops.rows.size(); ++r)
      sched.stops.push_back({stops.rows[r][id], stops.rows[r][name], csv_double(stops, r, lat),
                             csv_double(stops, r, lon)});
  }

  CsvTable rds = read_csv(dir / "route_directions.csv");
  {
    auto route = rds.col("route_id"), dir_col = rds.col("direction");
    for (std::size_t r = 0; r < rds.rows.size(); ++r)
      sched.route_directions.push_back(
          {rds.rows[r][route], direction_from_string(rds.rows[r][dir_col])});
  }

  CsvTable trips = read_csv(dir / "trips.csv");
  {
    auto id = trips.col("trip_id"), route = trips.col("route_id"), dir_col = trips.col("direction");
    auto date = trips.col("service_date"), veh = trips.col("vehicle_id"),
         block = trips.col("block_id");
    for (std::size_t r = 0; r < trips.rows.size(); ++r) {
      Trip t;
      t.trip_id = trips.rows[r][id];
      t.route_direction = {trips.rows[r][route], direction_from_string(trips.rows[r][dir_col])};
      t.service_date = parse_date(trips.rows[r][date]);
      t.vehicle_id = trips.rows[r][veh];
      t.block_id = trips.rows[r][block];
      sched.trips.push_back(std::move(t));
    }
  }

  CsvTable st = read_csv(dir / "stop_times.csv");
  {
    auto trip = st.col("trip_id"), seq = st.col("seq"), stop = st.col("stop_id");
    auto arr = st.col("arrival_s"), dep = st.col("departure_s");
    std::unordered_map<std::string, std::vector<std::pair<long, StopTime>>> by_trip;
    for (std::size_t r = 0; r < st.rows.size(); ++r)
      by_trip[st.rows[r][trip]].push_back(
          {csv_long(st, r, seq),
           StopTime{st.rows[r][stop], static_cast<int>(csv_long(st, r, arr)),
                    static_cast<int>(csv_long(st, r, dep))}});
    for (Trip& t : sched.trips) {
      auto it = by_trip.find(t.trip_id);
      if (it == by_trip.end())
        raise(Errc::MalformedRow, "stop_times.csv: trip '" + t.trip_id + "' has no stop times");
      auto& rows = it->second;
      std::sort(rows.begin(), rows.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].first != static_cast<long>(i))
          raise(Errc::MalformedRow,
                "stop_times.csv: trip '" + t.trip_id + "' seq not dense 0-based");
        t.stop_times.push_back(rows[i].second);
      }
      by_trip.erase(it);
    }
    if (!by_trip.empty()) raise(Errc::DanglingReference, by_trip.begin()->first);
  }

  std::ifstream net(dir / "network.json");
  if (!net) raise(Errc::MissingFile, (dir / "network.json").string());
  json j;
  try {
    net >> j;
  } catch (const json::exception& e) {
    raise(Errc::MalformedRow, std::string("network.json: ") + e.what());
  }
  try {
    sched.depot = j.at("depot").get<std::string>();
    sched.hub = j.at("hub").get<std::string>();
    sched.candidate_stationing_stops = j.at("candidate_stops").get<std::vector<std::string>>();
    sched.detour_factor = j.at("detour_factor").get<double>();
    sched.speed_mph = j.at("speed_mph").get<double>();
    sched.bus_capacity = j.at("bus_capacity").get<int>();
    if (j.contains("agency_plan"))
      sched.agency_plan = j.at("agency_plan").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    raise(Errc::MalformedRow, std::string("network.json: ") + e.what());
  }

  sched.finalize();
  return sched;
}

void save_schedule(const Schedule& schedule, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);

  CsvTable stops;
  stops.header = {"stop_id", "name", "lat", "lon"};
  for (const Stop& s : schedule.stops)
    stops.rows.push_back({s.stop_id, s.name, fmt_coord(s.lat), fmt_coord(s.lon)});
  write_csv(dir / "stops.csv", stops);

  CsvTable rds;
  rds.header = {"route_id", "direction"};
  for (const auto& rd : schedule.route_directions)
    rds.rows.push_back({rd.route_id, to_string(rd.direction)});
  write_csv(dir / "route_directions.csv", rds);

  CsvTable trips;
  trips.header = {"trip_id", "route_id", "direction", "service_date", "vehicle_id", "block_id"};
  CsvTable st;
  st.header = {"trip_id", "seq", "stop_id", "arrival_s", "departure_s"};
  for (const Trip& t : schedule.trips) {
    trips.rows.push_back({t.trip_id, t.route_direction.route_id,
                          to_string(t.route_direction.direction), format_date(t.service_date),
                          t.vehicle_id, t.block_id});
    for (std::size_t i = 0; i < t.stop_times.size(); ++i) {
      const StopTime& s = t.stop_times[i];
      st.rows.push_back({t.trip_id, std::to_string(i), s.stop_id, std::to_string(s.arrival_s),
                         std::to_string(s.departure_s)});
    }
  }
  write_csv(dir / "trips.csv", trips);
  write_csv(dir / "stop_times.csv", st);

  json net;
  net["depot"] = schedule.depot;
  net["hub"] = schedule.hub;
  net["candidate_stops"] = schedule.candidate_stationing_stops;
  net["detour_factor"] = schedule.detour_factor;
  net["speed_mph"] = schedule.speed_mph;
  net["bus_capacity"] = schedule.bus_capacity;
  if (!schedule.agency_plan.empty()) net["agency_plan"] = schedule.agency_plan;
  std::ofstream out(dir / "network.json", std::ios::binary);
  if (!out) raise(Errc::IoError, "cannot write network.json");
  out << net.dump(2) << '\n';
}

}  // namespace standby

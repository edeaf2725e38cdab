#include "standby/forecast.hpp"

#include <cstdio>
#include <fstream>

#include "nlohmann/json.hpp"
#include "standby/csv.hpp"
#include "standby/error.hpp"

namespace standby {

using nlohmann::json;

namespace {

json spec_to_json(const FeatureSpec& spec) {
  json j;
  j["categoricals"] = json::array();
  for (CatFeature c : spec.categoricals) j["categoricals"].push_back(to_string(c));
  j["numericals"] = json::array();
  for (NumFeature n : spec.numericals) j["numericals"].push_back(to_string(n));
  json levels = json::object();
  for (const auto& [c, lv] : spec.levels) {
    json m = json::object();
    for (const auto& [name, col] : lv) m[name] = col;
    levels[to_string(c)] = m;
  }
  j["levels"] = levels;
  json stats = json::object();
  for (const auto& [n, st] : spec.stats) stats[to_string(n)] = {{"mean", st.mean}, {"sd", st.sd}};
  j["stats"] = stats;
  j["columns"] = spec.columns;
  return j;
}

FeatureSpec spec_from_json(const json& j) {
  FeatureSpec spec;
  for (const auto& s : j.at("categoricals"))
    spec.categoricals.push_back(cat_feature_from_string(s.get<std::string>()));
  for (const auto& s : j.at("numericals"))
    spec.numericals.push_back(num_feature_from_string(s.get<std::string>()));
  for (const auto& [name, m] : j.at("levels").items()) {
    auto& lv = spec.levels[cat_feature_from_string(name)];
    for (const auto& [level, col] : m.items()) lv[level] = col.get<int>();
  }
  for (const auto& [name, st] : j.at("stats").items())
    spec.stats[num_feature_from_string(name)] = {st.at("mean").get<double>(),
                                                 st.at("sd").get<double>()};
  spec.columns = j.at("columns").get<int>();
  return spec;
}

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void save_model(const ForecastModel& m, const std::filesystem::path& path) {
  json j;
  j["v"] = 1;
  j["spec"] = spec_to_json(m.logit.spec);
  j["intercept"] = m.logit.intercept;
  j["weights"] = m.logit.weights;
  j["l2_lambda"] = m.logit.l2_lambda;
  if (m.calibrator) {
    json bp = json::array();
    for (const auto& [s, p] : m.calibrator->breakpoints) bp.push_back({s, p});
    j["calibrator"] = bp;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::IoError, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

ForecastModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::MissingFile, path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    raise(Errc::MalformedRow, path.string() + ": " + e.what());
  }
  try {
    if (j.at("v").get<int>() != 1)
      raise(Errc::ConfigInvalid, "unsupported model format version");
    ForecastModel m;
    m.logit.spec = spec_from_json(j.at("spec"));
    m.logit.intercept = j.at("intercept").get<double>();
    m.logit.weights = j.at("weights").get<std::vector<double>>();
    m.logit.l2_lambda = j.at("l2_lambda").get<double>();
    if (j.contains("calibrator")) {
      IsotonicCalibrator cal;
      for (const auto& bp : j.at("calibrator"))
        cal.breakpoints.emplace_back(bp.at(0).get<double>(), bp.at(1).get<double>());
      m.calibrator = std::move(cal);
    }
    return m;
  } catch (const json::exception& e) {
    raise(Errc::MalformedRow, path.string() + ": " + e.what());
  }
}

TripFeatures features_for_trip(const Trip& trip, const TripContext& ctx) {
  TripFeatures f;
  f.route_direction = trip.route_direction;
  f.ridership = ctx.ridership;
  f.window = service_window_from_start(trip.start_s());
  f.year = ctx.date.year;
  f.month = ctx.date.month;
  f.dow = day_of_week_of(ctx.date);
  f.precip_in_hr = ctx.precip_in_hr;
  f.temp_f = ctx.temp_f;
  return f;
}

std::map<std::string, double> forecast_day(const ForecastModel& model, const Schedule& schedule,
                                           const DayContext& context) {
  std::map<std::string, double> out;
  for (const Trip& t : schedule.trips) {
    auto it = context.find(t.trip_id);
    if (it == context.end()) raise(Errc::MissingContext, t.trip_id);
    out[t.trip_id] = model.probability(features_for_trip(t, it->second));
  }
  return out;
}

DayContext load_context_csv(const std::filesystem::path& path) {
  CsvTable t = read_csv(path);
  auto trip = t.col("trip_id"), date = t.col("date"), cat = t.col("ridership_category");
  auto precip = t.col("precip_in_hr"), temp = t.col("temp_f");
  DayContext ctx;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    TripContext c;
    c.date = parse_date(t.rows[r][date]);
    c.ridership = ridership_category_from_string(t.rows[r][cat]);
    c.precip_in_hr = csv_double(t, r, precip);
    c.temp_f = csv_double(t, r, temp);
    ctx[t.rows[r][trip]] = c;
  }
  return ctx;
}

void save_context_csv(const DayContext& ctx, const std::filesystem::path& path) {
  CsvTable t;
  t.header = {"trip_id", "date", "ridership_category", "precip_in_hr", "temp_f"};
  for (const auto& [trip_id, c] : ctx)
    t.rows.push_back({trip_id, format_date(c.date), to_string(c.ridership), fmt_g(c.precip_in_hr),
                      fmt_g(c.temp_f)});
  write_csv(path, t);
}

LabeledDataset load_labeled_trips(const std::filesystem::path& path) {
  CsvTable t = read_csv(path);
  auto trip = t.col("trip_id"), route = t.col("route_id"), dir = t.col("direction");
  auto window = t.col("service_window"), dow = t.col("day_of_week");
  auto cat = t.col("ridership_category"), year = t.col("year"), month = t.col("month");
  auto precip = t.col("precip_in_hr"), temp = t.col("temp_f"), label = t.col("label");
  LabeledDataset ds;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    LabeledTrip lt;
    lt.features.route_direction = {t.rows[r][route], direction_from_string(t.rows[r][dir])};
    lt.features.window = service_window_from_string(t.rows[r][window]);
    lt.features.dow = day_of_week_from_string(t.rows[r][dow]);
    lt.features.ridership = ridership_category_from_string(t.rows[r][cat]);
    lt.features.year = static_cast<int>(csv_long(t, r, year));
    lt.features.month = static_cast<int>(csv_long(t, r, month));
    if (lt.features.month < 1 || lt.features.month > 12)
      raise(Errc::MalformedRow,
            t.file + ":" + std::to_string(t.line_of(r)) + ": month out of range");
    lt.features.precip_in_hr = csv_double(t, r, precip);
    lt.features.temp_f = csv_double(t, r, temp);
    const long y = csv_long(t, r, label);
    if (y != 0 && y != 1)
      raise(Errc::MalformedRow, t.file + ":" + std::to_string(t.line_of(r)) + ": label not 0/1");
    lt.label = static_cast<int>(y);
    ds.trip_ids.push_back(t.rows[r][trip]);
    ds.rows.push_back(std::move(lt));
  }
  return ds;
}

void save_labeled_trips(const LabeledDataset& ds, const std::filesystem::path& path) {
  CsvTable t;
  t.header = {"trip_id", "route_id", "direction",    "service_window", "day_of_week",
              "ridership_category", "year", "month", "precip_in_hr",   "temp_f",
              "label"};
  for (std::size_t i = 0; i < ds.rows.size(); ++i) {
    const TripFeatures& f = ds.rows[i].features;
    t.rows.push_back({ds.trip_ids[i], f.route_direction.route_id,
                      to_string(f.route_direction.direction), to_string(f.window),
                      to_string(f.dow), to_string(f.ridership), std::to_string(f.year),
                      std::to_string(f.month), fmt_g(f.precip_in_hr), fmt_g(f.temp_f),
                      std::to_string(ds.rows[i].label)});
  }
  write_csv(path, t);
}

}  // namespace standby

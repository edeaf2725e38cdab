#include "standby/features.hpp"

#include <cmath>
#include <cstdio>

#include "standby/error.hpp"

namespace standby {

const char* to_string(ServiceWindow w) {
  switch (w) {
    case ServiceWindow::EarlyMorning: return "EarlyMorning";
    case ServiceWindow::Morning: return "Morning";
    case ServiceWindow::MidDay: return "MidDay";
    case ServiceWindow::Afternoon: return "Afternoon";
    case ServiceWindow::Evening: return "Evening";
  }
  return "?";
}

const char* to_string(RidershipCategory c) {
  switch (c) {
    case RidershipCategory::Low: return "Low";
    case RidershipCategory::Moderate: return "Moderate";
    case RidershipCategory::High: return "High";
    case RidershipCategory::OverCapacity: return "OverCapacity";
  }
  return "?";
}

const char* to_string(DayOfWeek d) {
  static const char* names[] = {"Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"};
  return names[static_cast<int>(d)];
}

ServiceWindow service_window_from_string(const std::string& s) {
  for (auto w : {ServiceWindow::EarlyMorning, ServiceWindow::Morning, ServiceWindow::MidDay,
                 ServiceWindow::Afternoon, ServiceWindow::Evening})
    if (s == to_string(w)) return w;
  raise(Errc::MalformedRow, "bad service window '" + s + "'");
}

RidershipCategory ridership_category_from_string(const std::string& s) {
  for (auto c : {RidershipCategory::Low, RidershipCategory::Moderate, RidershipCategory::High,
                 RidershipCategory::OverCapacity})
    if (s == to_string(c)) return c;
  raise(Errc::MalformedRow, "bad ridership category '" + s + "'");
}

DayOfWeek day_of_week_from_string(const std::string& s) {
  for (int i = 0; i < 7; ++i)
    if (s == to_string(static_cast<DayOfWeek>(i))) return static_cast<DayOfWeek>(i);
  raise(Errc::MalformedRow, "bad day of week '" + s + "'");
}

ServiceWindow service_window_from_start(int seconds_since_midnight) {
  const double h = seconds_since_midnight / 3600.0;
  if (h < 4 || h >= 24)
    raise(Errc::ConfigInvalid, "trip start outside the 4AM-midnight service day");
  if (h < 6) return ServiceWindow::EarlyMorning;
  if (h < 9) return ServiceWindow::Morning;
  if (h < 14) return ServiceWindow::MidDay;
  if (h < 18) return ServiceWindow::Afternoon;
  return ServiceWindow::Evening;
}

RidershipCategory ridership_category_from_occupancy(double rate) {
  if (rate < 0) raise(Errc::ConfigInvalid, "negative occupancy rate");
  if (rate < 0.3) return RidershipCategory::Low;
  if (rate < 0.6) return RidershipCategory::Moderate;
  if (rate <= 1.0) return RidershipCategory::High;
  return RidershipCategory::OverCapacity;
}

DayOfWeek day_of_week_of(const Date& d) {
  return static_cast<DayOfWeek>(day_of_week_index(d));
}

const char* to_string(CatFeature f) {
  switch (f) {
    case CatFeature::RouteDirection: return "route_direction";
    case CatFeature::ServiceWindow: return "service_window";
    case CatFeature::DayOfWeek: return "day_of_week";
    case CatFeature::Ridership: return "ridership";
    case CatFeature::Year: return "year";
    case CatFeature::Month: return "month";
  }
  return "?";
}

const char* to_string(NumFeature f) {
  return f == NumFeature::Precipitation ? "precipitation" : "temperature";
}

CatFeature cat_feature_from_string(const std::string& s) {
  for (CatFeature f : kAllCatFeatures)
    if (s == to_string(f)) return f;
  raise(Errc::ConfigInvalid, "unknown categorical feature '" + s + "'");
}

NumFeature num_feature_from_string(const std::string& s) {
  for (NumFeature f : kAllNumFeatures)
    if (s == to_string(f)) return f;
  raise(Errc::ConfigInvalid, "unknown numeric feature '" + s + "'");
}

std::string level_of(const TripFeatures& f, CatFeature which) {
  char buf[8];
  switch (which) {
    case CatFeature::RouteDirection: return f.route_direction.key();
    case CatFeature::ServiceWindow: return to_string(f.window);
    case CatFeature::DayOfWeek: return to_string(f.dow);
    case CatFeature::Ridership: return to_string(f.ridership);
    case CatFeature::Year: return std::to_string(f.year);
    case CatFeature::Month:
      std::snprintf(buf, sizeof(buf), "%02d", f.month);  // zero-padded keeps lexicographic = numeric
      return buf;
  }
  return "?";
}

double numeric_of(const TripFeatures& f, NumFeature which) {
  return which == NumFeature::Precipitation ? f.precip_in_hr : f.temp_f;
}

FeatureSpec build_feature_spec(std::span<const LabeledTrip> train,
                               std::span<const CatFeature> categoricals,
                               std::span<const NumFeature> numericals) {
  FeatureSpec spec;
  spec.categoricals.assign(categoricals.begin(), categoricals.end());
  spec.numericals.assign(numericals.begin(), numericals.end());

  for (CatFeature c : spec.categoricals) {
    auto& lv = spec.levels[c];
    for (const LabeledTrip& t : train) lv.emplace(level_of(t.features, c), 0);
  }
  int col = 0;
  for (CatFeature c : spec.categoricals)
    for (auto& [level, index] : spec.levels[c]) index = col++;

  for (NumFeature n : spec.numericals) {
    double sum = 0;
    for (const LabeledTrip& t : train) sum += numeric_of(t.features, n);
    const double mean = train.empty() ? 0.0 : sum / static_cast<double>(train.size());
    double ss = 0;
    for (const LabeledTrip& t : train) {
      const double d = numeric_of(t.features, n) - mean;
      ss += d * d;
    }
    double sd = train.empty() ? 1.0 : std::sqrt(ss / static_cast<double>(train.size()));
    if (sd == 0) sd = 1.0;  // constant column: center only
    spec.stats[n] = {mean, sd};
    ++col;
  }
  spec.columns = col;
  return spec;
}

std::vector<double> encode(const TripFeatures& f, const FeatureSpec& spec) {
  std::vector<double> x(static_cast<std::size_t>(spec.columns), 0.0);
  for (CatFeature c : spec.categoricals) {
    const std::string level = level_of(f, c);
    const auto& lv = spec.levels.at(c);
    auto it = lv.find(level);
    if (it == lv.end())
      raise(Errc::UnseenLevel, std::string(to_string(c)) + "='" + level + "'");
    x[static_cast<std::size_t>(it->second)] = 1.0;
  }
  int col = spec.columns - static_cast<int>(spec.numericals.size());
  for (NumFeature n : spec.numericals) {
    const NumStats& st = spec.stats.at(n);
    x[static_cast<std::size_t>(col++)] = (numeric_of(f, n) - st.mean) / st.sd;
  }
  return x;
}

}  // namespace standby

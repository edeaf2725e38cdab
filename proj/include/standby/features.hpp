#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "standby/schedule.hpp"

namespace standby {

enum class ServiceWindow { EarlyMorning, Morning, MidDay, Afternoon, Evening };
enum class RidershipCategory { Low, Moderate, High, OverCapacity };
enum class DayOfWeek { Mon, Tue, Wed, Thu, Fri, Sat, Sun };

const char* to_string(ServiceWindow w);
const char* to_string(RidershipCategory c);
const char* to_string(DayOfWeek d);
ServiceWindow service_window_from_string(const std::string& s);
RidershipCategory ridership_category_from_string(const std::string& s);
DayOfWeek day_of_week_from_string(const std::string& s);

/// Window boundaries: early morning [4,6), morning [6,9), mid-day [9,14),
/// afternoon [14,18), evening [18,24), in hours since midnight.
ServiceWindow service_window_from_start(int seconds_since_midnight);

/// Occupancy-rate categories: low [0,0.3), moderate [0.3,0.6), high [0.6,1.0],
/// over-capacity (>1.0).
RidershipCategory ridership_category_from_occupancy(double rate);

DayOfWeek day_of_week_of(const Date& d);

/// Covariate vector for one scheduled trip.
struct TripFeatures {
  RouteDirection route_direction;
  RidershipCategory ridership = RidershipCategory::Low;
  ServiceWindow window = ServiceWindow::Morning;
  int year = 2023;
  int month = 1;  // 1-12
  DayOfWeek dow = DayOfWeek::Mon;
  double precip_in_hr = 0;  // precipitation intensity, inches/hour
  double temp_f = 60;
};

struct LabeledTrip {
  TripFeatures features;
  int label = 0;  // 1 = disruption reported during the trip
};

/// Canonical ordering of the encodable features; column layout follows it.
enum class CatFeature { RouteDirection, ServiceWindow, DayOfWeek, Ridership, Year, Month };
enum class NumFeature { Precipitation, Temperature };

const char* to_string(CatFeature f);
const char* to_string(NumFeature f);
CatFeature cat_feature_from_string(const std::string& s);
NumFeature num_feature_from_string(const std::string& s);

inline constexpr CatFeature kAllCatFeatures[] = {
    CatFeature::RouteDirection, CatFeature::ServiceWindow, CatFeature::DayOfWeek,
    CatFeature::Ridership,      CatFeature::Year,          CatFeature::Month,
};
inline constexpr NumFeature kAllNumFeatures[] = {NumFeature::Precipitation,
                                                 NumFeature::Temperature};

struct NumStats {
  double mean = 0;
  double sd = 1;
};

/// One-hot layout plus numeric standardization, frozen at training time.
/// Column order: included categoricals in canonical feature order, levels
/// sorted lexicographically within each; then included numericals.
struct FeatureSpec {
  std::vector<CatFeature> categoricals;
  std::vector<NumFeature> numericals;
  std::map<CatFeature, std::map<std::string, int>> levels;  // level name -> column
  std::map<NumFeature, NumStats> stats;
  int columns = 0;
};

/// Level-name string for a feature value ("R1:outbound", "MidDay", "07", ...).
std::string level_of(const TripFeatures& f, CatFeature which);
double numeric_of(const TripFeatures& f, NumFeature which);

FeatureSpec build_feature_spec(std::span<const LabeledTrip> train,
                               std::span<const CatFeature> categoricals,
                               std::span<const NumFeature> numericals);

/// Dense encoded row; raises UnseenLevel for categorical values that were
/// absent from the training data.
std::vector<double> encode(const TripFeatures& f, const FeatureSpec& spec);

}  // namespace standby

#pragma once

#include <cmath>

namespace standby {

inline constexpr double kEarthRadiusKm = 6371.0088;
inline constexpr double kMilesPerKm = 0.621371192;

inline double deg2rad(double d) { return d * M_PI / 180.0; }

/// Great-circle distance in kilometers.
inline double haversine_km(double lat1, double lon1, double lat2, double lon2) {
  const double dlat = deg2rad(lat2 - lat1);
  const double dlon = deg2rad(lon2 - lon1);
  const double a = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(deg2rad(lat1)) * std::cos(deg2rad(lat2)) * std::sin(dlon / 2) *
                       std::sin(dlon / 2);
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(a)));
}

}  // namespace standby

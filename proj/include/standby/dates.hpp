#pragma once

#include <cstdio>
#include <string>

#include "standby/error.hpp"

namespace standby {

struct Date {
  int year = 1970;
  int month = 1;  // 1-12
  int day = 1;    // 1-31
  auto operator<=>(const Date&) const = default;
};

/// Days since 1970-01-01 (Howard Hinnant's civil-date algorithm).
inline long days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const long era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<long>(doe) - 719468;
}

/// 0 = Monday ... 6 = Sunday.
inline int day_of_week_index(const Date& d) {
  long days = days_from_civil(d.year, d.month, d.day);
  return static_cast<int>(((days % 7) + 10) % 7);  // 1970-01-01 was a Thursday
}

inline int day_of_year(const Date& d) {
  static const int cum[12] = {0, 31, 59, 90, 120, 151, 181, 212, 243, 273, 304, 334};
  int doy = cum[d.month - 1] + d.day;
  bool leap = (d.year % 4 == 0 && d.year % 100 != 0) || d.year % 400 == 0;
  if (leap && d.month > 2) ++doy;
  return doy;
}

inline Date add_days(const Date& d, int n) {
  long z = days_from_civil(d.year, d.month, d.day) + n + 719468;
  const long era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const long y = static_cast<long>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned day = doy - (153 * mp + 2) / 5 + 1;
  const unsigned month = mp + (mp < 10 ? 3 : -9);
  return Date{static_cast<int>(y + (month <= 2)), static_cast<int>(month), static_cast<int>(day)};
}

inline Date parse_date(const std::string& s) {
  int y = 0, m = 0, d = 0;
  if (std::sscanf(s.c_str(), "%d-%d-%d", &y, &m, &d) != 3 || m < 1 || m > 12 || d < 1 || d > 31)
    raise(Errc::MalformedRow, "bad date '" + s + "' (want YYYY-MM-DD)");
  return Date{y, m, d};
}

inline std::string format_date(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

}  // namespace standby

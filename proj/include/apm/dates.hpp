#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace apm {

struct Ymd {
  int year;
  int month;
  int day;
};

std::int32_t days_from_civil(int year, int month, int day);
Ymd civil_from_days(std::int32_t days);

// Calendar date stored as days since 1970-01-01. Weekly series index rows by
// their week-start date (a Sunday, on the MMWR grid).
class Date {
public:
  Date() = default;
  explicit constexpr Date(std::int32_t days) : days_(days) {}

  static Date from_ymd(int year, int month, int day);
  static std::optional<Date> parse_iso(std::string_view text);  // YYYY-MM-DD

  std::string to_iso() const;
  std::int32_t days_since_epoch() const { return days_; }
  Date plus_days(int n) const { return Date(days_ + n); }
  Date plus_weeks(int n) const { return Date(days_ + 7 * n); }
  int weekday_sunday0() const;  // 0 = Sunday .. 6 = Saturday
  int year() const { return civil_from_days(days_).year; }

  auto operator<=>(const Date&) const = default;

private:
  std::int32_t days_ = 0;
};

// MMWR epidemiological weeks: weeks run Sunday through Saturday and week 1 is
// the week containing January 4.
Date mmwr_week_start(int year, int week);
int mmwr_weeks_in_year(int year);
std::pair<int, int> mmwr_year_week(Date date);

}  // namespace apm

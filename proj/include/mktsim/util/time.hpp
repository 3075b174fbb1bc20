#pragma once

#include <cstdint>
#include <string>

namespace mktsim {

// Closed interval of epoch-second timestamps, begin <= end.
struct TimeRange {
  std::int64_t begin = 0;
  std::int64_t end = 0;

  bool contains(std::int64_t ts) const { return ts >= begin && ts <= end; }
  bool overlaps(const TimeRange& other) const {
    return begin <= other.end && other.begin <= end;
  }
};

// Epoch seconds (UTC) for a calendar date at 00:00:00.
std::int64_t epoch_from_date(int year, int month, int day);

// Parses "YYYY-MM-DD" or "YYYY-MM-DD HH:MM:SS" (UTC) to epoch seconds.
// Throws ConfigError on malformed input.
std::int64_t parse_timestamp(const std::string& text);

// "YYYY-MM-DD HH:MM:SS" UTC rendering of an epoch-second timestamp.
std::string format_timestamp(std::int64_t ts);

// 0 = Monday ... 6 = Sunday, for epoch-second timestamps.
int weekday_utc(std::int64_t ts);

// Seconds since UTC midnight.
int seconds_of_day(std::int64_t ts);

}  // namespace mktsim

#include "mktsim/util/time.hpp"

#include <chrono>
#include <cstdio>

#include "mktsim/util/errors.hpp"

namespace mktsim {

namespace chr = std::chrono;

std::int64_t epoch_from_date(int year, int month, int day) {
  chr::year_month_day ymd{chr::year{year}, chr::month{static_cast<unsigned>(month)},
                          chr::day{static_cast<unsigned>(day)}};
  if (!ymd.ok()) {
    throw ConfigError("invalid calendar date: " + std::to_string(year) + "-" +
                      std::to_string(month) + "-" + std::to_string(day));
  }
  return chr::sys_days{ymd}.time_since_epoch().count() * std::int64_t{86400};
}

std::int64_t parse_timestamp(const std::string& text) {
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
  int n = std::sscanf(text.c_str(), "%d-%d-%d %d:%d:%d", &y, &mo, &d, &h, &mi, &s);
  if (n >= 3) {
    if (h < 0 || h > 23 || mi < 0 || mi > 59 || s < 0 || s > 60) {
      throw ConfigError("invalid time of day in timestamp: " + text);
    }
    return epoch_from_date(y, mo, d) + h * 3600 + mi * 60 + s;
  }
  // Plain integer epoch seconds.
  try {
    std::size_t pos = 0;
    std::int64_t v = std::stoll(text, &pos);
    if (pos == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("unparsable timestamp: '" + text + "' (expected epoch seconds or YYYY-MM-DD[ HH:MM:SS])");
}

std::string format_timestamp(std::int64_t ts) {
  std::int64_t days = ts / 86400;
  if (ts < 0 && ts % 86400 != 0) --days;
  std::int64_t rem = ts - days * 86400;
  chr::year_month_day ymd{chr::sys_days{chr::days{days}}};
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u %02d:%02d:%02d", int(ymd.year()),
                unsigned(ymd.month()), unsigned(ymd.day()), int(rem / 3600),
                int((rem / 60) % 60), int(rem % 60));
  return buf;
}

int weekday_utc(std::int64_t ts) {
  // Epoch day 0 (1970-01-01) was a Thursday, i.e. weekday 3 counting from Monday.
  std::int64_t days = ts / 86400;
  if (ts < 0 && ts % 86400 != 0) --days;
  return static_cast<int>(((days + 3) % 7 + 7) % 7);
}

int seconds_of_day(std::int64_t ts) {
  std::int64_t r = ts % 86400;
  if (r < 0) r += 86400;
  return static_cast<int>(r);
}

}  // namespace mktsim

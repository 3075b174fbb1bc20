#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mktsim/data/bar.hpp"
#include "mktsim/data/market_panel.hpp"

namespace mktsim {

enum class FillPolicy { ForwardFill, DropRow };

// Trading-hours model used to lay out the time grid and to derive the
// panel's annualization factor.
struct SessionCalendar {
  enum class Kind { Continuous24x7, ExchangeSessions };
  Kind kind = Kind::Continuous24x7;
  // ExchangeSessions only: seconds since UTC midnight, Monday-Friday.
  int session_open = 13 * 3600 + 1800;   // 13:30 UTC (09:30 New York, winter)
  int session_close = 20 * 3600;         // 20:00 UTC

  bool in_session(std::int64_t ts) const;
  double periods_per_year(std::int64_t interval_seconds) const;
};

struct CleaningConfig {
  double max_gap_fraction = 0.05;
  FillPolicy fill_policy = FillPolicy::ForwardFill;
  SessionCalendar calendar;
};

struct DroppedSymbol {
  std::string symbol;
  double gap_fraction = 0.0;
  std::size_t missing = 0;
  std::size_t grid_size = 0;
};

struct CleanResult {
  MarketPanel panel;
  std::vector<DroppedSymbol> dropped;
};

// Aligns raw bars onto a common time grid and fills or drops gaps.
//
// The grid runs from the latest first-bar to the earliest last-bar across the
// requested symbols, stepped by interval_seconds and restricted to calendar
// sessions. Price columns are forward-filled and volume is zero-filled at
// gaps; a symbol whose gap fraction exceeds max_gap_fraction is dropped and
// reported instead. Duplicate (timestamp, symbol) pairs are rejected.
CleanResult align_and_clean(const std::vector<Bar>& bars,
                            const std::vector<std::string>& symbols,
                            std::int64_t interval_seconds, const CleaningConfig& cfg = {});

}  // namespace mktsim

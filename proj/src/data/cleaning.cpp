#include "mktsim/data/cleaning.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "mktsim/util/errors.hpp"
#include "mktsim/util/log.hpp"
#include "mktsim/util/time.hpp"

namespace mktsim {

bool SessionCalendar::in_session(std::int64_t ts) const {
  if (kind == Kind::Continuous24x7) return true;
  int wd = weekday_utc(ts);
  if (wd >= 5) return false;  // Saturday, Sunday
  int sod = seconds_of_day(ts);
  return sod >= session_open && sod < session_close;
}

double SessionCalendar::periods_per_year(std::int64_t interval_seconds) const {
  if (kind == Kind::Continuous24x7) {
    return static_cast<double>(std::int64_t{365} * 86400) / static_cast<double>(interval_seconds);
  }
  double bars_per_session =
      static_cast<double>(session_close - session_open) / static_cast<double>(interval_seconds);
  return 252.0 * bars_per_session;
}

CleanResult align_and_clean(const std::vector<Bar>& bars,
                            const std::vector<std::string>& symbols,
                            std::int64_t interval_seconds, const CleaningConfig& cfg) {
  if (bars.empty()) throw DataError("align_and_clean: no bars");
  if (interval_seconds <= 0) throw DataError("align_and_clean: non-positive interval");
  if (symbols.empty()) throw DataError("align_and_clean: no symbols requested");
  if (cfg.max_gap_fraction < 0.0 || cfg.max_gap_fraction > 1.0) {
    throw ConfigError("max_gap_fraction must be in [0,1]");
  }
  if (cfg.calendar.kind == SessionCalendar::Kind::ExchangeSessions &&
      cfg.calendar.session_open >= cfg.calendar.session_close) {
    throw ConfigError("session_open must precede session_close");
  }

  // Bars per symbol, keyed by timestamp; duplicates are errors, not merges.
  std::unordered_map<std::string, std::map<std::int64_t, const Bar*>> by_symbol;
  for (const auto& bar : bars) {
    if (auto why = bar.violation(); !why.empty()) {
      throw DataError("invalid bar " + bar.symbol + "@" + std::to_string(bar.timestamp) + ": " +
                      why);
    }
    auto [it, inserted] = by_symbol[bar.symbol].emplace(bar.timestamp, &bar);
    if (!inserted) {
      throw DataError("duplicate bar for " + bar.symbol + " at " +
                      format_timestamp(bar.timestamp));
    }
  }
  for (const auto& sym : symbols) {
    if (!by_symbol.count(sym)) throw DataError("no bars for requested symbol: " + sym);
  }

  // Grid span: latest first-bar to earliest last-bar.
  std::int64_t start = std::numeric_limits<std::int64_t>::min();
  std::int64_t end = std::numeric_limits<std::int64_t>::max();
  for (const auto& sym : symbols) {
    const auto& series = by_symbol[sym];
    start = std::max(start, series.begin()->first);
    end = std::min(end, series.rbegin()->first);
  }
  if (start > end) throw DataError("symbol coverage windows do not overlap");

  std::vector<std::int64_t> grid;
  for (std::int64_t ts = start; ts <= end; ts += interval_seconds) {
    if (cfg.calendar.in_session(ts)) grid.push_back(ts);
  }
  if (grid.empty()) throw DataError("no grid timestamps inside calendar sessions");

  // Per-symbol gap accounting and drop decisions.
  std::vector<std::string> kept;
  std::vector<DroppedSymbol> dropped;
  std::vector<std::vector<const Bar*>> grid_bars;  // kept-symbol major, grid minor
  for (const auto& sym : symbols) {
    const auto& series = by_symbol[sym];
    std::vector<const Bar*> cells(grid.size(), nullptr);
    std::size_t missing = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      auto it = series.find(grid[i]);
      if (it != series.end()) {
        cells[i] = it->second;
      } else {
        ++missing;
      }
    }
    double gap_fraction = static_cast<double>(missing) / static_cast<double>(grid.size());
    if (gap_fraction > cfg.max_gap_fraction) {
      dropped.push_back({sym, gap_fraction, missing, grid.size()});
      log::info("dropping symbol " + sym + ": gap fraction " + std::to_string(gap_fraction));
      continue;
    }
    kept.push_back(sym);
    grid_bars.push_back(std::move(cells));
  }
  if (kept.empty()) throw DataError("all symbols dropped by gap filter");

  // Under DropRow, remove grid rows where any kept symbol is missing.
  std::vector<std::size_t> rows;
  rows.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    bool complete = true;
    if (cfg.fill_policy == FillPolicy::DropRow) {
      for (const auto& cells : grid_bars) {
        if (!cells[i]) {
          complete = false;
          break;
        }
      }
    }
    if (complete) rows.push_back(i);
  }
  if (rows.empty()) throw DataError("no complete rows after drop-row cleaning");

  const std::size_t N = kept.size();
  const std::size_t F = base_feature_names().size();
  std::vector<std::int64_t> timestamps(rows.size());
  std::vector<double> values(rows.size() * N * F);

  for (std::size_t n = 0; n < N; ++n) {
    // last_seen starts at the symbol's most recent bar at or before the grid
    // start; by construction of the span such a bar always exists.
    const auto& series = by_symbol[kept[n]];
    auto it = series.upper_bound(grid[rows[0]]);
    const Bar* last_seen = std::prev(it)->second;

    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::size_t g = rows[r];
      timestamps[r] = grid[g];
      const Bar* bar = grid_bars[n][g];
      if (bar) last_seen = bar;
      double* cell = values.data() + (r * N + n) * F;
      cell[0] = last_seen->close;
      cell[1] = last_seen->open;
      cell[2] = last_seen->high;
      cell[3] = last_seen->low;
      cell[4] = bar ? bar->volume : 0.0;  // nothing traded at a filled gap
    }
  }

  MarketPanel panel(std::move(timestamps), kept, base_feature_names(), std::move(values),
                    interval_seconds, cfg.calendar.periods_per_year(interval_seconds));
  return {std::move(panel), std::move(dropped)};
}

}  // namespace mktsim

#pragma once

#include <string>

#include "mktsim/data/market_panel.hpp"

namespace mktsim {

// On-disk panel layout: <dir>/metadata.json (symbols, features, interval,
// periods_per_year, timestamps) plus <dir>/values.bin, the raw tensor as
// little-endian float64 in (time, symbol, feature) row-major order.
// save/load round-trips bitwise.
void save_panel(const MarketPanel& panel, const std::string& dir);
MarketPanel load_panel(const std::string& dir);

}  // namespace mktsim

#pragma once

#include <string>
#include <vector>

#include "mktsim/data/market_panel.hpp"

namespace mktsim {

enum class IndicatorKind { Sma, Ema, Macd, Rsi, BollUpper, BollLower, RollingVol };

const char* indicator_kind_name(IndicatorKind kind);
IndicatorKind indicator_kind_from_name(const std::string& name);

struct IndicatorSpec {
  IndicatorKind kind = IndicatorKind::Sma;
  int window = 20;
  int secondary_window = 26;  // MACD slow EMA
  int signal_window = 9;      // MACD signal smoothing

  // Stable column name, e.g. "sma_20" or "macd_12_26_9".
  std::string feature_name() const;
  void validate() const;
};

// SMA(20), EMA(12), MACD(12,26,9), RSI(14), BOLL(20) upper+lower,
// ROLLING_VOL(20).
std::vector<IndicatorSpec> default_indicator_specs();

// One indicator series over a close-price vector; output has the same length
// with warm-up entries set to the first defined value.
std::vector<double> compute_indicator(const std::vector<double>& closes,
                                      const IndicatorSpec& spec);

// New panel with one column per spec appended, computed per symbol on close
// prices. Existing columns are untouched.
MarketPanel add_indicators(const MarketPanel& panel, const std::vector<IndicatorSpec>& specs);

}  // namespace mktsim

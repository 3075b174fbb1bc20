#pragma once

#include <cmath>
#include <cstdint>
#include <string>

namespace mktsim {

// One OHLCV record for a single symbol and interval.
struct Bar {
  std::int64_t timestamp = 0;  // epoch seconds, UTC
  std::string symbol;
  double open = 0.0;
  double high = 0.0;
  double low = 0.0;
  double close = 0.0;
  double volume = 0.0;

  // Empty string when valid, else a short reason.
  std::string violation() const {
    auto bad_price = [](double p) { return !std::isfinite(p) || p <= 0.0; };
    if (bad_price(open) || bad_price(high) || bad_price(low) || bad_price(close)) {
      return "prices must be finite and > 0";
    }
    if (low > std::min(open, close) || high < std::max(open, close)) {
      return "OHLC bounds violated";
    }
    if (!std::isfinite(volume) || volume < 0.0) return "volume must be >= 0";
    return {};
  }

  bool valid() const { return violation().empty(); }
};

}  // namespace mktsim

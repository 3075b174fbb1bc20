#include "mktsim/features/indicators.hpp"

#include <algorithm>
#include <cmath>

#include "mktsim/util/errors.hpp"

namespace mktsim {

const char* indicator_kind_name(IndicatorKind kind) {
  switch (kind) {
    case IndicatorKind::Sma: return "sma";
    case IndicatorKind::Ema: return "ema";
    case IndicatorKind::Macd: return "macd";
    case IndicatorKind::Rsi: return "rsi";
    case IndicatorKind::BollUpper: return "boll_upper";
    case IndicatorKind::BollLower: return "boll_lower";
    case IndicatorKind::RollingVol: return "rolling_vol";
  }
  return "?";
}

IndicatorKind indicator_kind_from_name(const std::string& name) {
  if (name == "sma") return IndicatorKind::Sma;
  if (name == "ema") return IndicatorKind::Ema;
  if (name == "macd") return IndicatorKind::Macd;
  if (name == "rsi") return IndicatorKind::Rsi;
  if (name == "boll_upper") return IndicatorKind::BollUpper;
  if (name == "boll_lower") return IndicatorKind::BollLower;
  if (name == "rolling_vol") return IndicatorKind::RollingVol;
  throw ConfigError("unknown indicator kind: " + name);
}

std::string IndicatorSpec::feature_name() const {
  std::string name = std::string(indicator_kind_name(kind)) + "_" + std::to_string(window);
  if (kind == IndicatorKind::Macd) {
    name += "_" + std::to_string(secondary_window) + "_" + std::to_string(signal_window);
  }
  return name;
}

void IndicatorSpec::validate() const {
  if (window < 1) throw ConfigError("indicator window must be >= 1");
  if (kind == IndicatorKind::Macd) {
    if (secondary_window <= window) throw ConfigError("MACD requires window < secondary_window");
    if (signal_window < 1) throw ConfigError("MACD signal_window must be >= 1");
  }
}

std::vector<IndicatorSpec> default_indicator_specs() {
  return {
      {IndicatorKind::Sma, 20},
      {IndicatorKind::Ema, 12},
      {IndicatorKind::Macd, 12, 26, 9},
      {IndicatorKind::Rsi, 14},
      {IndicatorKind::BollUpper, 20},
      {IndicatorKind::BollLower, 20},
      {IndicatorKind::RollingVol, 20},
  };
}

namespace {

std::vector<double> sma(const std::vector<double>& x, int w) {
  std::vector<double> out(x.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += x[i];
    if (i >= static_cast<std::size_t>(w)) sum -= x[i - w];
    if (i + 1 >= static_cast<std::size_t>(w)) out[i] = sum / w;
  }
  // warm-up rows take the first defined value
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(w); ++i) out[i] = out[w - 1];
  return out;
}

std::vector<double> ema(const std::vector<double>& x, int w) {
  std::vector<double> out(x.size());
  double alpha = 2.0 / (w + 1.0);
  out[0] = x[0];
  for (std::size_t i = 1; i < x.size(); ++i) {
    out[i] = alpha * x[i] + (1.0 - alpha) * out[i - 1];
  }
  return out;
}

// Rolling sample standard deviation (denominator w-1) over windows of w
// values ending at each index; defined from index w-1 (value 0 when w == 1).
std::vector<double> rolling_std(const std::vector<double>& x, int w, std::size_t& first_defined) {
  std::vector<double> out(x.size(), 0.0);
  first_defined = static_cast<std::size_t>(w - 1);
  if (w < 2) return out;
  for (std::size_t i = first_defined; i < x.size(); ++i) {
    double mean = 0.0;
    for (int k = 0; k < w; ++k) mean += x[i - k];
    mean /= w;
    double ss = 0.0;
    for (int k = 0; k < w; ++k) {
      double d = x[i - k] - mean;
      ss += d * d;
    }
    out[i] = std::sqrt(ss / (w - 1));
  }
  return out;
}

std::vector<double> rsi(const std::vector<double>& x, int w) {
  std::vector<double> out(x.size());
  auto value = [](double avg_gain, double avg_loss) {
    if (avg_loss == 0.0) return 100.0;
    return 100.0 - 100.0 / (1.0 + avg_gain / avg_loss);
  };
  double avg_gain = 0.0, avg_loss = 0.0;
  for (int i = 1; i <= w; ++i) {
    double d = x[i] - x[i - 1];
    if (d > 0) avg_gain += d; else avg_loss -= d;
  }
  avg_gain /= w;
  avg_loss /= w;
  out[w] = value(avg_gain, avg_loss);
  for (std::size_t i = w + 1; i < x.size(); ++i) {
    double d = x[i] - x[i - 1];
    // Wilder smoothing
    avg_gain = (avg_gain * (w - 1) + std::max(d, 0.0)) / w;
    avg_loss = (avg_loss * (w - 1) + std::max(-d, 0.0)) / w;
    out[i] = value(avg_gain, avg_loss);
  }
  for (int i = 0; i < w; ++i) out[i] = out[w];
  return out;
}

std::vector<double> simple_returns(const std::vector<double>& x) {
  std::vector<double> r(x.size(), 0.0);
  for (std::size_t i = 1; i < x.size(); ++i) r[i] = x[i] / x[i - 1] - 1.0;
  return r;
}

}  // namespace

std::vector<double> compute_indicator(const std::vector<double>& closes,
                                      const IndicatorSpec& spec) {
  spec.validate();
  const std::size_t T = closes.size();
  int longest = spec.kind == IndicatorKind::Macd ? spec.secondary_window : spec.window;
  if (static_cast<std::size_t>(longest) >= T) {
    throw DataError("indicator window " + std::to_string(longest) +
                    " must be smaller than series length " + std::to_string(T));
  }

  switch (spec.kind) {
    case IndicatorKind::Sma:
      return sma(closes, spec.window);
    case IndicatorKind::Ema:
      return ema(closes, spec.window);
    case IndicatorKind::Macd: {
      auto fast = ema(closes, spec.window);
      auto slow = ema(closes, spec.secondary_window);
      std::vector<double> out(T);
      for (std::size_t i = 0; i < T; ++i) out[i] = fast[i] - slow[i];
      return out;
    }
    case IndicatorKind::Rsi:
      return rsi(closes, spec.window);
    case IndicatorKind::BollUpper:
    case IndicatorKind::BollLower: {
      auto mid = sma(closes, spec.window);
      std::size_t first = 0;
      auto sd = rolling_std(closes, spec.window, first);
      double sign = spec.kind == IndicatorKind::BollUpper ? 2.0 : -2.0;
      std::vector<double> out(T);
      for (std::size_t i = first; i < T; ++i) out[i] = mid[i] + sign * sd[i];
      for (std::size_t i = 0; i < first; ++i) out[i] = out[first];
      return out;
    }
    case IndicatorKind::RollingVol: {
      auto r = simple_returns(closes);
      std::size_t first = 0;
      // window w of returns ends at index i for i >= w (r[0] is padding)
      auto sd = rolling_std(r, spec.window, first);
      std::size_t start = std::min(T - 1, static_cast<std::size_t>(spec.window));
      std::vector<double> out(T);
      for (std::size_t i = start; i < T; ++i) out[i] = sd[i];
      for (std::size_t i = 0; i < start; ++i) out[i] = out[start];
      return out;
    }
  }
  throw ConfigError("unhandled indicator kind");
}

MarketPanel add_indicators(const MarketPanel& panel, const std::vector<IndicatorSpec>& specs) {
  const std::size_t T = panel.rows();
  const std::size_t N = panel.num_symbols();

  std::vector<std::string> names;
  names.reserve(specs.size());
  for (const auto& spec : specs) {
    std::string name = spec.feature_name();
    if (panel.has_feature(name) ||
        std::find(names.begin(), names.end(), name) != names.end()) {
      throw ConfigError("duplicate feature name: " + name);
    }
    names.push_back(std::move(name));
  }

  std::vector<std::vector<double>> columns(specs.size(), std::vector<double>(T * N));
  for (std::size_t n = 0; n < N; ++n) {
    std::vector<double> closes(T);
    for (std::size_t t = 0; t < T; ++t) closes[t] = panel.close(t, n);
    for (std::size_t k = 0; k < specs.size(); ++k) {
      auto series = compute_indicator(closes, specs[k]);
      for (std::size_t t = 0; t < T; ++t) columns[k][t * N + n] = series[t];
    }
  }
  return panel.with_appended_features(names, columns);
}

}  // namespace mktsim

#include "mktsim/data/market_panel.hpp"

#include <algorithm>
#include <cmath>

#include "mktsim/util/errors.hpp"

namespace mktsim {

MarketPanel::MarketPanel(std::vector<std::int64_t> timestamps, std::vector<std::string> symbols,
                         std::vector<std::string> feature_names, std::vector<double> values,
                         std::int64_t interval_seconds, double periods_per_year)
    : timestamps_(std::move(timestamps)),
      symbols_(std::move(symbols)),
      feature_names_(std::move(feature_names)),
      values_(std::move(values)),
      interval_seconds_(interval_seconds),
      periods_per_year_(periods_per_year) {
  if (timestamps_.empty()) throw DataError("panel has no rows");
  if (symbols_.empty()) throw DataError("panel has no symbols");
  if (interval_seconds_ <= 0) throw DataError("interval_seconds must be positive");
  if (!(periods_per_year_ > 0.0)) throw DataError("periods_per_year must be positive");

  const auto& base = base_feature_names();
  if (feature_names_.size() < base.size() ||
      !std::equal(base.begin(), base.end(), feature_names_.begin())) {
    throw DataError("panel features must begin with close,open,high,low,volume");
  }
  for (std::size_t i = 0; i < feature_names_.size(); ++i) {
    for (std::size_t j = i + 1; j < feature_names_.size(); ++j) {
      if (feature_names_[i] == feature_names_[j]) {
        throw DataError("duplicate feature name: " + feature_names_[i]);
      }
    }
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    for (std::size_t j = i + 1; j < symbols_.size(); ++j) {
      if (symbols_[i] == symbols_[j]) throw DataError("duplicate symbol: " + symbols_[i]);
    }
  }

  if (values_.size() != timestamps_.size() * symbols_.size() * feature_names_.size()) {
    throw DataError("panel tensor size mismatch");
  }
  for (std::size_t i = 1; i < timestamps_.size(); ++i) {
    std::int64_t gap = timestamps_[i] - timestamps_[i - 1];
    if (gap <= 0 || gap % interval_seconds_ != 0) {
      throw DataError("timestamps must be strictly increasing on the interval grid");
    }
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw DataError("panel contains non-finite values");
  }
  for (std::size_t t = 0; t < timestamps_.size(); ++t) {
    for (std::size_t n = 0; n < symbols_.size(); ++n) {
      if (close(t, n) <= 0.0) throw DataError("panel close prices must be > 0");
    }
  }
}

std::size_t MarketPanel::feature_index(const std::string& name) const {
  auto it = std::find(feature_names_.begin(), feature_names_.end(), name);
  if (it == feature_names_.end()) throw DataError("no such feature: " + name);
  return static_cast<std::size_t>(it - feature_names_.begin());
}

bool MarketPanel::has_feature(const std::string& name) const {
  return std::find(feature_names_.begin(), feature_names_.end(), name) != feature_names_.end();
}

MarketPanel MarketPanel::slice_rows(std::size_t first_row, std::size_t last_row) const {
  if (first_row > last_row || last_row >= rows()) throw DataError("invalid row slice");
  std::size_t stride = symbols_.size() * feature_names_.size();
  std::vector<std::int64_t> ts(timestamps_.begin() + first_row,
                               timestamps_.begin() + last_row + 1);
  std::vector<double> vals(values_.begin() + first_row * stride,
                           values_.begin() + (last_row + 1) * stride);
  return MarketPanel(std::move(ts), symbols_, feature_names_, std::move(vals),
                     interval_seconds_, periods_per_year_);
}

MarketPanel MarketPanel::select_symbols(const std::vector<std::string>& keep) const {
  std::vector<std::size_t> idx;
  idx.reserve(keep.size());
  for (const auto& name : keep) {
    auto it = std::find(symbols_.begin(), symbols_.end(), name);
    if (it == symbols_.end()) throw DataError("no such symbol: " + name);
    idx.push_back(static_cast<std::size_t>(it - symbols_.begin()));
  }
  std::size_t F = feature_names_.size();
  std::vector<double> vals(rows() * keep.size() * F);
  for (std::size_t t = 0; t < rows(); ++t) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      for (std::size_t f = 0; f < F; ++f) {
        vals[(t * keep.size() + k) * F + f] = value(t, idx[k], f);
      }
    }
  }
  return MarketPanel(timestamps_, keep, feature_names_, std::move(vals), interval_seconds_,
                     periods_per_year_);
}

MarketPanel MarketPanel::with_appended_features(
    const std::vector<std::string>& extra_names,
    const std::vector<std::vector<double>>& appended) const {
  if (extra_names.size() != appended.size()) throw DataError("feature/value count mismatch");
  std::size_t N = symbols_.size();
  std::size_t F = feature_names_.size();
  std::size_t Fx = F + extra_names.size();

  std::vector<std::string> names = feature_names_;
  names.insert(names.end(), extra_names.begin(), extra_names.end());

  for (const auto& col : appended) {
    if (col.size() != rows() * N) throw DataError("appended feature column size mismatch");
  }

  std::vector<double> vals(rows() * N * Fx);
  for (std::size_t t = 0; t < rows(); ++t) {
    for (std::size_t n = 0; n < N; ++n) {
      double* dst = vals.data() + (t * N + n) * Fx;
      const double* src = values_.data() + (t * N + n) * F;
      std::copy(src, src + F, dst);
      for (std::size_t k = 0; k < appended.size(); ++k) {
        dst[F + k] = appended[k][t * N + n];
      }
    }
  }
  return MarketPanel(timestamps_, symbols_, std::move(names), std::move(vals),
                     interval_seconds_, periods_per_year_);
}

std::size_t MarketPanel::lower_bound_row(std::int64_t ts) const {
  auto it = std::lower_bound(timestamps_.begin(), timestamps_.end(), ts);
  return static_cast<std::size_t>(it - timestamps_.begin());
}

std::size_t MarketPanel::upper_bound_row(std::int64_t ts) const {
  auto it = std::upper_bound(timestamps_.begin(), timestamps_.end(), ts);
  if (it == timestamps_.begin()) return rows();
  return static_cast<std::size_t>(it - timestamps_.begin()) - 1;
}

std::vector<MarketPanel> split_panel(const MarketPanel& panel,
                                     const std::vector<TimeRange>& ranges) {
  for (const auto& r : ranges) {
    if (r.begin > r.end) throw ConfigError("range begin after end");
  }
  for (std::size_t i = 1; i < ranges.size(); ++i) {
    if (ranges[i - 1].end >= ranges[i].begin) {
      throw ConfigError("ranges must be ordered and non-overlapping");
    }
  }
  std::vector<MarketPanel> out;
  out.reserve(ranges.size());
  for (const auto& r : ranges) {
    std::size_t first = panel.lower_bound_row(r.begin);
    std::size_t last = panel.upper_bound_row(r.end);
    if (first >= panel.rows() || last >= panel.rows() || first > last) {
      throw DataError("empty slice: range " + format_timestamp(r.begin) + " .. " +
                      format_timestamp(r.end) + " selects no panel rows");
    }
    out.push_back(panel.slice_rows(first, last));
  }
  return out;
}

}  // namespace mktsim

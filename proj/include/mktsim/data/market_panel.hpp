#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mktsim/util/time.hpp"

namespace mktsim {

// The five feature columns every panel starts with, in this order.
inline const std::vector<std::string>& base_feature_names() {
  static const std::vector<std::string> names = {"close", "open", "high", "low", "volume"};
  return names;
}

// Time-aligned (time x symbol x feature) tensor of market data. Instances are
// immutable after construction and safe to share across threads.
//
// values are stored row-major as [t][n][f]; timestamps are strictly
// increasing and every gap between consecutive rows is a positive multiple of
// interval_seconds (larger multiples mark session breaks).
class MarketPanel {
 public:
  MarketPanel(std::vector<std::int64_t> timestamps, std::vector<std::string> symbols,
              std::vector<std::string> feature_names, std::vector<double> values,
              std::int64_t interval_seconds, double periods_per_year);

  std::size_t rows() const { return timestamps_.size(); }
  std::size_t num_symbols() const { return symbols_.size(); }
  std::size_t num_features() const { return feature_names_.size(); }
  // Feature columns past the five base ones.
  std::size_t num_indicators() const { return feature_names_.size() - base_feature_names().size(); }

  const std::vector<std::int64_t>& timestamps() const { return timestamps_; }
  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::vector<std::string>& feature_names() const { return feature_names_; }
  const std::vector<double>& values() const { return values_; }
  std::int64_t interval_seconds() const { return interval_seconds_; }
  double periods_per_year() const { return periods_per_year_; }

  double value(std::size_t t, std::size_t n, std::size_t f) const {
    return values_[(t * symbols_.size() + n) * feature_names_.size() + f];
  }
  double close(std::size_t t, std::size_t n) const { return value(t, n, 0); }

  // Row-major slice of one row: N*F contiguous doubles.
  std::span<const double> row(std::size_t t) const {
    std::size_t stride = symbols_.size() * feature_names_.size();
    return {values_.data() + t * stride, stride};
  }

  // Index of a feature column; throws DataError if absent.
  std::size_t feature_index(const std::string& name) const;
  bool has_feature(const std::string& name) const;

  // Contiguous row slice [first_row, last_row], sharing symbols and features.
  MarketPanel slice_rows(std::size_t first_row, std::size_t last_row) const;

  // Panel restricted to the given symbols (which must all exist), in the
  // given order.
  MarketPanel select_symbols(const std::vector<std::string>& keep) const;

  // New panel with extra feature columns appended. appended is indexed
  // [k][t*N + n] for k in [0, extra_names.size()).
  MarketPanel with_appended_features(const std::vector<std::string>& extra_names,
                                     const std::vector<std::vector<double>>& appended) const;

  // Row index of the first timestamp >= ts (rows() if none).
  std::size_t lower_bound_row(std::int64_t ts) const;
  // Row index of the last timestamp <= ts (rows() if none).
  std::size_t upper_bound_row(std::int64_t ts) const;

 private:
  std::vector<std::int64_t> timestamps_;
  std::vector<std::string> symbols_;
  std::vector<std::string> feature_names_;
  std::vector<double> values_;
  std::int64_t interval_seconds_;
  double periods_per_year_;
};

// Contiguous sub-panels, one per requested range. Ranges must be ordered,
// non-overlapping and each must select at least one row.
std::vector<MarketPanel> split_panel(const MarketPanel& panel,
                                     const std::vector<TimeRange>& ranges);

}  // namespace mktsim

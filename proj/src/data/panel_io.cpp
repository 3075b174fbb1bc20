#include "mktsim/data/panel_io.hpp"

#include <bit>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "mktsim/util/errors.hpp"

namespace mktsim {

namespace fs = std::filesystem;
using nlohmann::json;

static_assert(std::endian::native == std::endian::little,
              "panel tensor file assumes a little-endian host");

void save_panel(const MarketPanel& panel, const std::string& dir) {
  fs::create_directories(dir);

  json meta;
  meta["format_version"] = 1;
  meta["symbols"] = panel.symbols();
  meta["feature_names"] = panel.feature_names();
  meta["interval_seconds"] = panel.interval_seconds();
  meta["periods_per_year"] = panel.periods_per_year();
  meta["timestamps"] = panel.timestamps();

  std::ofstream mf(fs::path(dir) / "metadata.json");
  if (!mf) throw DataError("cannot write panel metadata in " + dir);
  mf << meta.dump(2) << '\n';

  std::ofstream vf(fs::path(dir) / "values.bin", std::ios::binary);
  if (!vf) throw DataError("cannot write panel values in " + dir);
  vf.write(reinterpret_cast<const char*>(panel.values().data()),
           static_cast<std::streamsize>(panel.values().size() * sizeof(double)));
}

MarketPanel load_panel(const std::string& dir) {
  std::ifstream mf(fs::path(dir) / "metadata.json");
  if (!mf) throw DataError("missing panel metadata: " + dir);
  json meta = json::parse(mf);

  auto timestamps = meta.at("timestamps").get<std::vector<std::int64_t>>();
  auto symbols = meta.at("symbols").get<std::vector<std::string>>();
  auto features = meta.at("feature_names").get<std::vector<std::string>>();
  auto interval = meta.at("interval_seconds").get<std::int64_t>();
  auto ppy = meta.at("periods_per_year").get<double>();

  std::size_t count = timestamps.size() * symbols.size() * features.size();
  std::vector<double> values(count);
  std::ifstream vf(fs::path(dir) / "values.bin", std::ios::binary);
  if (!vf) throw DataError("missing panel values: " + dir);
  vf.read(reinterpret_cast<char*>(values.data()),
          static_cast<std::streamsize>(count * sizeof(double)));
  if (static_cast<std::size_t>(vf.gcount()) != count * sizeof(double)) {
    throw DataError("panel values file truncated: " + dir);
  }

  return MarketPanel(std::move(timestamps), std::move(symbols), std::move(features),
                     std::move(values), interval, ppy);
}

}  // namespace mktsim

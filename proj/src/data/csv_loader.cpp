#include "mktsim/data/csv_loader.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "mktsim/util/errors.hpp"
#include "mktsim/util/time.hpp"

namespace mktsim {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(trim(tok));
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

double parse_number(const std::string& s, const char* what) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DataError(std::string("unparsable ") + what + ": '" + s + "'");
  }
  return v;
}

}  // namespace

std::vector<Bar> load_csv(const std::string& path, const CsvSchema& schema) {
  std::ifstream in(path);
  if (!in) throw DataError("missing file: " + path);

  std::string header_line;
  if (!std::getline(in, header_line)) throw DataError("empty file: " + path);
  std::vector<std::string> header = split_line(header_line);

  static const std::array<const char*, 7> logical = {"timestamp", "symbol", "open", "high",
                                                     "low",       "close",  "volume"};
  std::array<std::size_t, 7> col{};
  for (std::size_t i = 0; i < logical.size(); ++i) {
    std::string want = logical[i];
    if (auto it = schema.find(want); it != schema.end()) want = it->second;
    auto pos = std::find(header.begin(), header.end(), want);
    if (pos == header.end()) {
      throw DataError("missing column '" + want + "' in " + path);
    }
    col[i] = static_cast<std::size_t>(pos - header.begin());
  }

  std::vector<Bar> bars;
  std::vector<std::string> row_errors;
  std::string line;
  std::size_t row = 0;  // 1-based data row number
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    ++row;
    auto fields = split_line(line);
    try {
      if (fields.size() < header.size()) throw DataError("too few columns");
      Bar bar;
      bar.timestamp = parse_timestamp(fields[col[0]]);
      bar.symbol = fields[col[1]];
      if (bar.symbol.empty()) throw DataError("empty symbol");
      bar.open = parse_number(fields[col[2]], "open");
      bar.high = parse_number(fields[col[3]], "high");
      bar.low = parse_number(fields[col[4]], "low");
      bar.close = parse_number(fields[col[5]], "close");
      bar.volume = parse_number(fields[col[6]], "volume");
      if (auto why = bar.violation(); !why.empty()) throw DataError(why);
      bars.push_back(std::move(bar));
    } catch (const std::exception& e) {
      row_errors.push_back("row " + std::to_string(row) + ": " + e.what());
    }
  }

  if (!row_errors.empty()) {
    std::string msg = "invalid rows in " + path + " (" + std::to_string(row_errors.size()) +
                      " of " + std::to_string(row) + "):";
    for (const auto& e : row_errors) msg += "\n  " + e;
    throw DataError(msg);
  }
  if (bars.empty()) throw DataError("no data rows in " + path);
  return bars;
}

void write_csv(const std::string& path, const std::vector<Bar>& bars) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  out << "timestamp,symbol,open,high,low,close,volume\n";
  out.precision(17);
  for (const auto& b : bars) {
    out << b.timestamp << ',' << b.symbol << ',' << b.open << ',' << b.high << ',' << b.low
        << ',' << b.close << ',' << b.volume << '\n';
  }
}

}  // namespace mktsim

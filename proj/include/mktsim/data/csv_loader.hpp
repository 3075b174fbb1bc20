#pragma once

#include <map>
#include <string>
#include <vector>

#include "mktsim/data/bar.hpp"

namespace mktsim {

// Maps the logical column names (timestamp, symbol, open, high, low, close,
// volume) to the header names actually present in the file. Missing entries
// default to the logical name itself.
using CsvSchema = std::map<std::string, std::string>;

// Parses an OHLCV CSV into bars. The file must have a header row. Timestamps
// may be epoch seconds or "YYYY-MM-DD[ HH:MM:SS]" UTC.
//
// Any invalid row fails the whole load: the thrown DataError lists every bad
// data row by its 1-based position below the header.
std::vector<Bar> load_csv(const std::string& path, const CsvSchema& schema = {});

// Writes bars back out in the canonical column order. Used by tooling and
// tests; output is parseable by load_csv with the default schema.
void write_csv(const std::string& path, const std::vector<Bar>& bars);

}  // namespace mktsim

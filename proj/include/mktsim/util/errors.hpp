#pragma once

#include <stdexcept>
#include <string>

namespace mktsim {

// Invalid configuration: bad window layout, out-of-range parameter, etc.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Bad or missing input data: unreadable file, invalid rows, empty panel.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Failure while training or rolling out: divergence, worker failure.
class RuntimeFault : public std::runtime_error {
 public:
  explicit RuntimeFault(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mktsim

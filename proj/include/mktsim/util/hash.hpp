#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mktsim {

// SHA-256 hex digest of a byte buffer.
std::string sha256_hex(const void* data, std::size_t size);
std::string sha256_hex(const std::string& s);
std::string sha256_hex(const std::vector<double>& v);

// SHA-256 hex digest of a file's contents. Throws DataError if unreadable.
std::string sha256_file(const std::string& path);

}  // namespace mktsim

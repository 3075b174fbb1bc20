#pragma once

#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <string>

namespace mktsim::log {

enum class Level { Debug = 0, Info = 1, Warn = 2, Error = 3, Off = 4 };

// Verbosity comes from the MKTSIM_LOG env var (debug|info|warn|error|off).
// Default is warn so library use stays quiet.
inline Level& threshold() {
  static Level level = [] {
    const char* env = std::getenv("MKTSIM_LOG");
    if (!env) return Level::Warn;
    std::string v(env);
    if (v == "debug") return Level::Debug;
    if (v == "info") return Level::Info;
    if (v == "warn") return Level::Warn;
    if (v == "error") return Level::Error;
    if (v == "off") return Level::Off;
    return Level::Warn;
  }();
  return level;
}

inline void write(Level level, const std::string& msg) {
  if (level < threshold()) return;
  static std::mutex mu;
  static const char* names[] = {"debug", "info", "warn", "error"};
  std::lock_guard<std::mutex> lock(mu);
  std::fprintf(stderr, "[mktsim %s] %s\n", names[static_cast<int>(level)], msg.c_str());
}

inline void debug(const std::string& msg) { write(Level::Debug, msg); }
inline void info(const std::string& msg) { write(Level::Info, msg); }
inline void warn(const std::string& msg) { write(Level::Warn, msg); }
inline void error(const std::string& msg) { write(Level::Error, msg); }

}  // namespace mktsim::log

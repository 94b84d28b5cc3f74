#include "vortexpaths/io/log.hpp"

#include <cstdlib>
#include <iostream>

namespace vortexpaths::io {

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("VORTEXPATHS_LOG");
    if (!env) return LogLevel::Warn;
    const std::string s(env);
    if (s == "error") return LogLevel::Error;
    if (s == "warn") return LogLevel::Warn;
    if (s == "info") return LogLevel::Info;
    if (s == "debug") return LogLevel::Debug;
    return LogLevel::Warn;
  }();
  return level;
}

void log(LogLevel level, const std::string& message) {
  if (static_cast<int>(level) > static_cast<int>(log_level())) return;
  const char* tag = "";
  switch (level) {
    case LogLevel::Error: tag = "error"; break;
    case LogLevel::Warn: tag = "warn"; break;
    case LogLevel::Info: tag = "info"; break;
    case LogLevel::Debug: tag = "debug"; break;
  }
  std::cerr << "vortexpaths [" << tag << "] " << message << "\n";
}

}  // namespace vortexpaths::io

#pragma once

#include <cstdarg>
#include <string>

namespace apm::log {

enum class Level { debug = 0, info = 1, warn = 2, error = 3, off = 4 };

// Level is read once from APM_LOG (debug|info|warn|error|off); default warn.
Level level();
void set_level(Level lv);

void write(Level lv, const std::string& msg);

std::string strfmt(const char* fmt, ...) __attribute__((format(printf, 1, 2)));

inline void debug(const std::string& m) { write(Level::debug, m); }
inline void info(const std::string& m) { write(Level::info, m); }
inline void warn(const std::string& m) { write(Level::warn, m); }
inline void error(const std::string& m) { write(Level::error, m); }

}  // namespace apm::log

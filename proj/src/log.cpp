#include "apm/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <vector>

namespace apm::log {

namespace {

Level parse_env() {
  const char* v = std::getenv("APM_LOG");
  if (v == nullptr) return Level::warn;
  if (std::strcmp(v, "debug") == 0) return Level::debug;
  if (std::strcmp(v, "info") == 0) return Level::info;
  if (std::strcmp(v, "warn") == 0) return Level::warn;
  if (std::strcmp(v, "error") == 0) return Level::error;
  if (std::strcmp(v, "off") == 0) return Level::off;
  return Level::warn;
}

Level& current() {
  static Level lv = parse_env();
  return lv;
}

const char* tag(Level lv) {
  switch (lv) {
    case Level::debug: return "debug";
    case Level::info: return "info";
    case Level::warn: return "warn";
    case Level::error: return "error";
    default: return "?";
  }
}

}  // namespace

Level level() { return current(); }
void set_level(Level lv) { current() = lv; }

void write(Level lv, const std::string& msg) {
  if (lv < current()) return;
  std::fprintf(stderr, "[apm %s] %s\n", tag(lv), msg.c_str());
}

std::string strfmt(const char* fmt, ...) {
  va_list args;
  va_start(args, fmt);
  va_list copy;
  va_copy(copy, args);
  int n = std::vsnprintf(nullptr, 0, fmt, copy);
  va_end(copy);
  std::string out;
  if (n > 0) {
    std::vector<char> buf(static_cast<std::size_t>(n) + 1);
    std::vsnprintf(buf.data(), buf.size(), fmt, args);
    out.assign(buf.data(), static_cast<std::size_t>(n));
  }
  va_end(args);
  return out;
}

}  // namespace apm::log

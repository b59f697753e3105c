#pragma once

#include <cstdio>

namespace euler1d::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

/// Current level; initialized from the EULER_LOG environment variable
/// (error|warn|info|debug), default warn. Messages go to stderr only.
Level level();
void set_level(Level lv);

bool enabled(Level lv);

template <typename... Args>
void emit(Level lv, const char* fmt, Args... args) {
  if (!enabled(lv)) return;
  const char* tag = lv == Level::Error  ? "error"
                    : lv == Level::Warn ? "warn"
                    : lv == Level::Info ? "info"
                                        : "debug";
  std::fprintf(stderr, "[euler1d %s] ", tag);
  std::fprintf(stderr, fmt, args...);
  std::fprintf(stderr, "\n");
}

template <typename... Args>
void error(const char* fmt, Args... args) {
  emit(Level::Error, fmt, args...);
}
template <typename... Args>
void warn(const char* fmt, Args... args) {
  emit(Level::Warn, fmt, args...);
}
template <typename... Args>
void info(const char* fmt, Args... args) {
  emit(Level::Info, fmt, args...);
}
template <typename... Args>
void debug(const char* fmt, Args... args) {
  emit(Level::Debug, fmt, args...);
}

}  // namespace euler1d::log

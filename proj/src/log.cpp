#include "euler1d/log.hpp"

#include <cstdlib>
#include <cstring>

namespace euler1d::log {

namespace {

Level init_from_env() {
  const char* v = std::getenv("EULER_LOG");
  if (!v) return Level::Warn;
  if (std::strcmp(v, "error") == 0) return Level::Error;
  if (std::strcmp(v, "warn") == 0) return Level::Warn;
  if (std::strcmp(v, "info") == 0) return Level::Info;
  if (std::strcmp(v, "debug") == 0) return Level::Debug;
  return Level::Warn;
}

Level& current() {
  static Level lv = init_from_env();
  return lv;
}

}  // namespace

Level level() { return current(); }
void set_level(Level lv) { current() = lv; }
bool enabled(Level lv) { return static_cast<int>(lv) <= static_cast<int>(current()); }

}  // namespace euler1d::log

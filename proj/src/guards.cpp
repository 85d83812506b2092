#include "tlgram/guards.hpp"

#include <cstdlib>
#include <string>

#include "tlgram/errors.hpp"

namespace tlgram {

bool guards_overridden() {
  static const bool overridden = [] {
    const char* v = std::getenv(std::string(kGuardOverrideEnv).c_str());
    return v != nullptr && std::string(v) == "1";
  }();
  return overridden;
}

void require_range(std::string_view what, long value, long lo, long hi) {
  if (value < lo || (value > hi && !guards_overridden())) {
    throw GuardError(std::string(what) + "=" + std::to_string(value) + " outside supported range [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

}  // namespace tlgram

#pragma once

#include <string_view>

namespace tlgram {

/// Environment variable that disables every size guard. Running beyond the
/// guards is unsupported: memory and time are not bounded.
inline constexpr std::string_view kGuardOverrideEnv = "TLGRAM_UNSUPPORTED_BEYOND_GUARDS";

bool guards_overridden();

/// Throws GuardError unless lo <= value <= hi (or guards are overridden).
/// The lower bound is always enforced.
void require_range(std::string_view what, long value, long lo, long hi);

}  // namespace tlgram

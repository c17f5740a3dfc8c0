#pragma once

#include <cstdint>

namespace jaclef {

/// Runtime switch for self-checks (rank-nullity, exact kernel verification).
/// Defaults to on in builds without NDEBUG, or when JACLEF_DEBUG is set.
bool debug_checks();
void set_debug_checks(bool on);

/// Number of self-checks executed so far.
std::uint64_t debug_check_count();
void note_debug_check();

}  // namespace jaclef

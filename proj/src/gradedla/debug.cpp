#include "jaclef/debug.hpp"

#include <atomic>
#include <cstdlib>

namespace jaclef {

namespace {

bool initial_state() {
#ifndef NDEBUG
  return true;
#else
  return std::getenv("JACLEF_DEBUG") != nullptr;
#endif
}

std::atomic<bool>& flag() {
  static std::atomic<bool> on{initial_state()};
  return on;
}

std::atomic<std::uint64_t> checks{0};

}  // namespace

bool debug_checks() { return flag().load(std::memory_order_relaxed); }
void set_debug_checks(bool on) { flag().store(on); }
std::uint64_t debug_check_count() { return checks.load(); }
void note_debug_check() { checks.fetch_add(1, std::memory_order_relaxed); }

}  // namespace jaclef

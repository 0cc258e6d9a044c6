#include "core/budget.hpp"

#include <atomic>
#include <string>

#include "core/error.hpp"

namespace defcalc {

namespace {
std::atomic<std::uint64_t> g_budget{10'000'000};
} // namespace

std::uint64_t enumeration_budget() { return g_budget.load(std::memory_order_relaxed); }

void set_enumeration_budget(std::uint64_t max_elements) {
  g_budget.store(max_elements == 0 ? 1 : max_elements, std::memory_order_relaxed);
}

void check_budget(std::uint64_t needed, const char* what) {
  const auto limit = enumeration_budget();
  if (needed > limit) {
    fail_budget(std::string(what) + ": needs " + std::to_string(needed) +
                " elements, budget is " + std::to_string(limit));
  }
}

} // namespace defcalc

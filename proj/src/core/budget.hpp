#pragma once

#include <cstdint>

namespace defcalc {

// Global cap on brute-force enumeration sizes (element counts, search-space
// sizes).  Exceeding it raises ErrorKind::Budget instead of hanging.
std::uint64_t enumeration_budget();
void set_enumeration_budget(std::uint64_t max_elements);

// Throws Budget if `needed` exceeds the current budget. `what` names the
// enumeration for the error message.
void check_budget(std::uint64_t needed, const char* what);

} // namespace defcalc

#pragma once

#include <cstdint>

namespace matcode {

// Budget for exact exhaustive searches, counted in candidates examined:
// span vectors for weight enumeration, column subsets for support search.
// The default allows a full scan of a 22-dimensional binary span.
struct EnumBudget {
  std::uint64_t max_candidates = 1ull << 22;
};

// Reads MC_BUDGET (a candidate count) if set and parseable, otherwise
// returns the default. Pure read; never caches.
EnumBudget budget_from_env();

}  // namespace matcode

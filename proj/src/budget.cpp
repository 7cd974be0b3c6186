#include "matcode/budget.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace matcode {

EnumBudget budget_from_env() {
  EnumBudget b;
  if (const char* raw = std::getenv("MC_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0)
      throw std::invalid_argument("MC_BUDGET must be a positive integer");
    b.max_candidates = v;
  }
  return b;
}

}  // namespace matcode

#include "seqcal/budget.hpp"

#include <cstdlib>

#include "seqcal/error.hpp"

namespace seqcal {

std::uint64_t Budget::default_limit() {
  const char* env = std::getenv("SEQCAL_BUDGET");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return kDefault;
  return static_cast<std::uint64_t>(v);
}

void Budget::charge(std::uint64_t n, const char* what) {
  if (n > left_) {
    left_ = 0;
    throw BudgetExceeded(std::string("enumeration budget of ") + std::to_string(limit_) +
                         " exceeded in " + what + " (raise SEQCAL_BUDGET)");
  }
  left_ -= n;
}

}  // namespace seqcal

#pragma once

#include <cstdint>
#include <string>

namespace seqcal {

// Counts elementary checks performed by the brute-force oracles and throws
// BudgetExceeded once the allowance runs out.
class Budget {
 public:
  static constexpr std::uint64_t kDefault = 10'000'000;

  // kDefault unless SEQCAL_BUDGET holds a positive integer.
  static std::uint64_t default_limit();

  Budget() : Budget(default_limit()) {}
  explicit Budget(std::uint64_t limit) : left_(limit), limit_(limit) {}

  void charge(std::uint64_t n, const char* what);
  std::uint64_t used() const { return limit_ - left_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t left_;
  std::uint64_t limit_;
};

}  // namespace seqcal

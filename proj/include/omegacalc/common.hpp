#pragma once

#include <cstdint>
#include <span>

namespace omegacalc {

using Int = long long;

// Default budgets. Searches never truncate silently: exceeding a budget is a
// hard error (errc::budget_exceeded).
inline constexpr Int kDefaultSearchBudget = 100'000'000;  // box-scan candidate vectors
inline constexpr Int kDefaultOracleBudget = 100'000'000;  // length-ordered oracle vectors
inline constexpr Int kDefaultNodeBudget = 50'000'000;     // online node counter (block/leamer)
inline constexpr Int kAcmFactorBudget = 1'000'000'000'000;  // largest integer we trial-divide

// Saturating product of (v + offset) terms, used for up-front budget checks.
inline Int saturating_box_size(std::span<const Int> values, Int offset, Int cap) {
  Int prod = 1;
  for (Int v : values) {
    const Int term = v + offset;
    if (term <= 0) return cap + 1;
    if (prod > cap / term + 1) return cap + 1;
    prod *= term;
    if (prod > cap) return cap + 1;
  }
  return prod;
}

}  // namespace omegacalc

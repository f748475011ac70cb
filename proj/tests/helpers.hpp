#pragma once

#include <random>
#include <vector>

#include "omegacalc/numerical_monoid.hpp"
#include "omegacalc/omega_engine.hpp"

namespace omegacalc::testing {

// Brute-force membership: some combination sum(a_i * g_i) = n with
// a_i <= n / g_i. Independent of the sieve.
inline bool naive_member(const std::vector<Int>& gens, Int n) {
  if (n < 0) return false;
  if (n == 0) return true;
  auto rec = [&](auto&& self, std::size_t i, Int rest) -> bool {
    if (rest == 0) return true;
    if (i == gens.size()) return false;
    for (Int a = 0; a * gens[i] <= rest; ++a)
      if (self(self, i + 1, rest - a * gens[i])) return true;
    return false;
  };
  return rec(rec, 0, n);
}

// Unpruned odometer sweep of the bounds box using is_bullet; the reference
// the optimized scan is checked against.
inline std::vector<std::vector<Int>> naive_bullet_scan(const NumericalMonoid& monoid, Int n) {
  const std::vector<Int> bounds = bullet_bounds(monoid, n);
  std::vector<std::vector<Int>> out;
  std::vector<Int> a(bounds.size(), 0);
  for (;;) {
    if (is_bullet(monoid, n, a)) out.push_back(a);
    std::size_t i = bounds.size();
    while (i > 0 && a[i - 1] == bounds[i - 1]) a[--i] = 0;
    if (i == 0) break;
    ++a[i - 1];
  }
  return out;
}

inline std::mt19937_64 seeded_rng(std::uint64_t seed = 0x5eedULL) {
  return std::mt19937_64(seed);
}

// Random member of the monoid in [1, hi].
inline Int random_member(const NumericalMonoid& monoid, Int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<Int> dist(1, hi);
  for (;;) {
    const Int n = dist(rng);
    if (monoid.contains(n)) return n;
  }
}

}  // namespace omegacalc::testing

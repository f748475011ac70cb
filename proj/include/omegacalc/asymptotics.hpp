#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "omegacalc/omega_engine.hpp"

namespace omegacalc {

/// omega over every member of [lo, hi]; lo must be >= 1.
struct OmegaSeries {
  NumericalMonoid monoid;
  Int lo = 0;
  Int hi = 0;
  std::vector<std::pair<Int, Int>> entries;  // (n, omega(n)), ascending n
};

OmegaSeries omega_series(const NumericalMonoid& monoid, Int lo, Int hi,
                         Int budget = kDefaultSearchBudget);

/// Eventually-exact model omega(n) = floor(n/n1) + intercepts[n mod n1].
/// `dissonance` is the largest member of the fitted series where the model
/// fails (nullopt when it fits the whole series); exactness is certified for
/// members in (dissonance, certified_through].
struct QuasilinearModel {
  Int n1 = 0;
  std::vector<Int> intercepts;
  std::optional<Int> dissonance;
  Int certified_through = 0;

  Int value(Int n) const { return n / n1 + intercepts[static_cast<std::size_t>(n % n1)]; }
};

/// Fits the intercept table from the top stability_window * n1 entries of the
/// series, requiring exact omega(n + n1) = omega(n) + 1 consistency there.
/// The eventual behaviour is detected, never assumed.
QuasilinearModel fit_quasilinear(const OmegaSeries& series, Int stability_window = 5);

/// Minimal p dividing n1 such that n -> model(n) - n/n1 is p-periodic.
Int minimal_period(const QuasilinearModel& model);

struct Rational {
  Int num = 0;
  Int den = 1;
};

Rational make_rational(Int num, Int den);

inline bool operator==(const Rational& a, const Rational& b) {
  return a.num == b.num && a.den == b.den;
}

/// omega(N)/N as an exact reduced rational, for members N past the Frobenius
/// number. Approaches 1/n1 as N grows.
Rational asymptotic_ratio(const NumericalMonoid& monoid, Int N, Int budget = kDefaultSearchBudget);

}  // namespace omegacalc

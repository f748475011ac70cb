#pragma once

#include <vector>

#include "omegacalc/numerical_monoid.hpp"

namespace omegacalc {

/// The complete bullet set of an element, together with the per-coordinate
/// caps the search ran under. Every bullet a satisfies a_i <= bounds[i], and
/// each bounds[i]*e_i is itself a bullet.
struct BulletSet {
  Int element = 0;
  std::vector<Int> bounds;
  std::vector<FactorizationVector> bullets;  // ascending lexicographic
};

struct OmegaResult {
  Int element = 0;
  Int omega = 0;
  BulletSet bullet_set;
  std::vector<FactorizationVector> maximal_bullets;  // length == omega, lex order
};

/// Minimal b_i > 0 with b_i * n_i - n a member, for each generator n_i.
/// These caps confine every bullet of n to the box prod [0, b_i].
std::vector<Int> bullet_bounds(const NumericalMonoid& monoid, Int n);

/// Bullet test: the vector's value minus n is a member, and dropping any one
/// generator actually used breaks that. Expects n to be a member.
bool is_bullet(const NumericalMonoid& monoid, Int n, const std::vector<Int>& coords);

/// Exhaustive bullet enumeration over the bounds box. The scan is pruned but
/// returns exactly the same set as an unpruned sweep; throws BudgetExceeded
/// instead of ever truncating.
BulletSet bullets(const NumericalMonoid& monoid, Int n, Int budget = kDefaultSearchBudget);

/// omega(n) = maximal bullet length, plus the bullets that attain it.
OmegaResult omega(const NumericalMonoid& monoid, Int n, Int budget = kDefaultSearchBudget);

/// Independent check on omega(): enumerates vectors by total length with no
/// componentwise caps, up to the sound total-length cap sum(b_i).
Int omega_oracle(const NumericalMonoid& monoid, Int n, Int budget = kDefaultOracleBudget);

}  // namespace omegacalc

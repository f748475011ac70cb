#pragma once

#include <vector>

#include "omegacalc/common.hpp"
#include "omegacalc/errors.hpp"

namespace omegacalc {

/// Multiplicative monoid {n >= 1 : n == a (mod b)} together with the unit 1,
/// for a^2 == a (mod b). Regular means a = 1 (Hilbert type); only then does
/// divisibility inside the monoid coincide with integer divisibility among
/// members, which the omega search relies on.
class ArithmeticCongruenceMonoid {
 public:
  static ArithmeticCongruenceMonoid create(Int a, Int b);

  Int a() const { return a_; }
  Int b() const { return b_; }
  bool regular_unit() const { return a_ == 1; }

  bool contains(Int n) const { return n >= 1 && (n == 1 || n % b_ == a_ % b_); }

  /// No splitting n = d * (n/d) with both parts non-unit members.
  bool is_irreducible(Int n) const;

  /// All factorizations of n into irreducibles, each as a sorted multiset of
  /// member values. Trial-division based; n is capped by the factoring budget.
  std::vector<std::vector<Int>> factorizations(Int n, Int budget = kAcmFactorBudget) const;

 private:
  ArithmeticCongruenceMonoid(Int a, Int b) : a_(a), b_(b) {}
  Int a_ = 1;
  Int b_ = 1;
};

struct AcmOmegaResult {
  Int element = 0;
  Int omega = 0;
  std::vector<std::vector<Int>> bullets;          // sorted multisets of irreducible values
  std::vector<std::vector<Int>> maximal_bullets;  // those with omega parts
};

/// omega in a regular (a = 1) arithmetical congruence monoid via bullet
/// search. Candidate irreducibles are assembled from the primes dividing x;
/// where a partial product lands in the wrong class mod b it is padded with
/// the smallest prime of the complementary class not dividing x. Bullet size
/// is capped by Omega(x), the number of prime factors of x with multiplicity.
AcmOmegaResult acm_omega(const ArithmeticCongruenceMonoid& monoid, Int x,
                         Int budget = kDefaultNodeBudget);

}  // namespace omegacalc

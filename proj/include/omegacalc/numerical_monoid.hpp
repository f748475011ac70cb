#pragma once

#include <cstddef>
#include <vector>

#include "omegacalc/common.hpp"
#include "omegacalc/errors.hpp"

namespace omegacalc {

/// Exponent vector over the minimal generators of a numerical monoid.
/// `value` and `length` are always consistent with `coords`.
struct FactorizationVector {
  std::vector<Int> coords;
  Int value = 0;
  Int length = 0;

  static FactorizationVector of(std::vector<Int> coords, const std::vector<Int>& generators);

  friend bool operator==(const FactorizationVector& a, const FactorizationVector& b) {
    return a.coords == b.coords;
  }
  friend bool operator<(const FactorizationVector& a, const FactorizationVector& b) {
    return a.coords < b.coords;
  }
};

/// Additive submonoid of N generated by coprime positive integers.
///
/// Construction minimalizes the generating set, rejects gcd > 1 (rescaling
/// would silently relabel every element) and rejects 1 as a generator.
/// Membership is answered from a sieve table up to the Frobenius number;
/// everything beyond it is a member. Instances are immutable and safe to
/// share across threads.
class NumericalMonoid {
 public:
  static NumericalMonoid from_generators(std::vector<Int> raw_generators);

  /// Sorted set with redundant generators removed. Pure helper; does not
  /// validate gcd or positivity beyond what removal needs.
  static std::vector<Int> minimalize(std::vector<Int> generators);

  const std::vector<Int>& generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }
  Int frobenius() const { return frobenius_; }

  bool contains(Int n) const {
    if (n < 0) return false;
    if (n > frobenius_) return true;
    return table_[static_cast<std::size_t>(n)] != 0;
  }

  /// Divisibility in the monoid: a | b iff b - a is a member.
  /// Both arguments must be members.
  bool divides(Int a, Int b) const;

  /// The complete set of factorizations of n, in ascending lexicographic
  /// order of the exponent vectors.
  std::vector<FactorizationVector> factorizations(Int n) const;

 private:
  explicit NumericalMonoid(std::vector<Int> minimal_generators);

  std::vector<Int> generators_;
  Int frobenius_ = 0;
  std::vector<char> table_;  // membership for 0..frobenius_
};

}  // namespace omegacalc

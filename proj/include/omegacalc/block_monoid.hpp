#pragma once

#include <map>
#include <vector>

#include "omegacalc/common.hpp"
#include "omegacalc/errors.hpp"

namespace omegacalc {

/// Finite Abelian group given by invariant factors (d_1,...,d_m), each >= 2.
/// Elements are tuples (x_1,...,x_m) with 0 <= x_i < d_i, encoded as a single
/// id in [0, order) by mixed radix; addition is componentwise mod d_i.
/// An empty factor list is the trivial group.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<Int> invariant_factors);

  const std::vector<Int>& invariant_factors() const { return factors_; }
  Int order() const { return order_; }

  Int add(Int a, Int b) const;
  Int scale(Int k, Int a) const;  // k*a for k >= 0
  Int negate(Int a) const;

  std::vector<Int> tuple_of(Int id) const;
  Int id_of(const std::vector<Int>& tuple) const;  // coordinates reduced mod d_i

  void check_element(Int id) const;

 private:
  std::vector<Int> factors_;
  std::vector<Int> strides_;
  Int order_ = 1;
};

/// Zero-sum multiset over a group: element id -> multiplicity >= 1.
struct ZeroSumSequence {
  std::map<Int, Int> mult;
  Int length = 0;

  /// Validates membership of the elements and the zero-sum condition.
  static ZeroSumSequence make(const FiniteAbelianGroup& group, const std::map<Int, Int>& items);

  friend bool operator==(const ZeroSumSequence& a, const ZeroSumSequence& b) {
    return a.mult == b.mult;
  }
  friend bool operator<(const ZeroSumSequence& a, const ZeroSumSequence& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.mult < b.mult;
  }
};

/// Does the multiset sum to the identity? Throws on out-of-range element ids.
bool is_zero_sum(const FiniteAbelianGroup& group, const std::map<Int, Int>& items);

/// All irreducible blocks (minimal zero-sum sequences), including the
/// singleton {0}. Sorted by (length, multiset). The enumeration caps the
/// length at sum(d_i - 1) + 1 and the group order at 64; past either it
/// raises BudgetExceeded instead of returning a partial answer.
std::vector<ZeroSumSequence> minimal_zero_sum_sequences(const FiniteAbelianGroup& group,
                                                        Int budget = kDefaultNodeBudget);

/// Divisibility in the block monoid is multiset containment.
bool block_divides(const FiniteAbelianGroup& group, const ZeroSumSequence& x,
                   const ZeroSumSequence& y);

/// A bullet over blocks: a multiset of irreducibles, kept as a sorted list.
struct BlockBullet {
  std::vector<ZeroSumSequence> parts;
  Int length = 0;  // number of parts

  friend bool operator==(const BlockBullet& a, const BlockBullet& b) {
    return a.parts == b.parts;
  }
};

struct BlockOmegaResult {
  ZeroSumSequence element;
  Int omega = 0;
  std::vector<BlockBullet> bullets;
  std::vector<BlockBullet> maximal_bullets;
};

/// omega of a non-empty block by exhaustive bullet search. Candidate bullets
/// are multisets of irreducibles sharing support with x, with at most
/// length(x) parts (each part must cover at least one needed copy).
BlockOmegaResult block_omega(const FiniteAbelianGroup& group, const ZeroSumSequence& x,
                             Int budget = kDefaultNodeBudget);

}  // namespace omegacalc

#pragma once

#include <utility>
#include <vector>

#include "omegacalc/numerical_monoid.hpp"

namespace omegacalc {

using LeamerPoint = std::pair<Int, Int>;

struct LeamerBox {
  Int n_max = 0;
  Int k_max = 0;
};

/// Arithmetic runs inside a numerical monoid: (n, k) encodes the run
/// n, n+s, ..., n+ks. Members have k >= 1, plus the identity (0, 0); the
/// definition admits the (n, 0) reading, which we exclude. Enumeration is
/// always truncated to an explicit box and no operation assumes completeness
/// outside it.
class LeamerMonoid {
 public:
  static LeamerMonoid create(NumericalMonoid gamma, Int s, LeamerBox box);

  const NumericalMonoid& gamma() const { return gamma_; }
  Int s() const { return s_; }
  const LeamerBox& box() const { return box_; }

  bool contains(Int n, Int k) const;

 private:
  LeamerMonoid(NumericalMonoid gamma, Int s, LeamerBox box)
      : gamma_(std::move(gamma)), s_(s), box_(box) {}
  NumericalMonoid gamma_;
  Int s_ = 1;
  LeamerBox box_;
};

/// All members inside the box, the identity included; ascending (n, k).
std::vector<LeamerPoint> leamer_points(const LeamerMonoid& monoid);

/// Members with no decomposition into two non-identity members. Decomposition
/// parts have smaller coordinates, so the box truncation is exact here.
/// Requires n_max past the Frobenius number of the underlying monoid so the
/// dense region is reached.
std::vector<LeamerPoint> leamer_irreducibles(const LeamerMonoid& monoid);

struct LeamerBullet {
  std::vector<LeamerPoint> parts;  // irreducibles with repetition, sorted
  Int length = 0;
};

struct LeamerOmegaResult {
  LeamerPoint element;
  Int omega = 0;
  std::vector<LeamerBullet> bullets;
  std::vector<LeamerBullet> maximal_bullets;
  std::vector<std::pair<LeamerPoint, Int>> caps;  // per-irreducible multiplicity caps
};

/// Exploratory omega over the box irreducibles: each irreducible u is capped
/// at the least multiple of u the element divides, and the capped box is
/// scanned exhaustively. Results are relative to the stated box.
LeamerOmegaResult leamer_omega(const LeamerMonoid& monoid, Int n, Int k,
                               Int node_budget = kDefaultNodeBudget, Int cap_budget = 1000);

}  // namespace omegacalc

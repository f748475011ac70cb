#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "omegacalc/omega_engine.hpp"

namespace omegacalc {

/// omega of an element of <n1,n2> from any one of its factorizations (a1,a2):
/// max{ceil(a2/n1)*n2 + a1, ceil(a1/n2)*n1 + a2}.
Int omega_two_gen_from_factorization(Int n1, Int n2, Int a1, Int a2);

/// Residue-indexed closed form for <n1,n2>: omega(n) = q + a_of_r[r] with
/// n = q*n1 + r, certified empirically for n >= validity_threshold.
struct ResidueTable {
  Int n1 = 0;
  Int n2 = 0;
  std::vector<Int> a_of_r;     // a_of_r[r] = min a >= 0 with a*n1 == r (mod n2)
  Int validity_threshold = 0;  // first member from which the formula matches the search
};

/// Builds the table and locates the validity threshold by comparing the
/// formula against the bullet search over members up to `horizon`
/// (default 4*n1*n2). Requires 1 < n1 < n2 coprime.
ResidueTable build_residue_table(Int n1, Int n2, Int horizon = 0);

/// Evaluates the residue formula. Errors below the certified threshold
/// rather than returning an unverified value.
Int omega_two_gen_residue(const ResidueTable& table, Int n);

enum class IntervalParity { odd, even };

/// Generator omega-values for interval monoids: <2n-1,2n,2n+1> (odd case)
/// or <2n,2n+1,2n+2> (even case), n >= 2. Returns (generator, omega) pairs.
std::vector<std::pair<Int, Int>> interval_generator_omegas(Int n, IntervalParity parity);

/// Canonical weak-order pattern of three values, e.g. "w3<w1=w2".
/// There are exactly 13 such patterns.
std::string ordering_pattern(Int w1, Int w2, Int w3);

const std::vector<std::string>& all_ordering_patterns();

/// The three patterns conjectured never to occur for minimal 3-generator
/// monoids: w1>w2>w3, w1=w2>w3 and w3<w1<w2.
const std::array<std::string, 3>& forbidden_ordering_patterns();

struct OrderingScanRow {
  Int n1 = 0, n2 = 0, n3 = 0;
  Int w1 = 0, w2 = 0, w3 = 0;
  std::string pattern;
};

struct OrderingScanResult {
  Int bound = 0;
  std::vector<OrderingScanRow> rows;          // ordered by (n1,n2,n3)
  std::map<std::string, Int> census;          // pattern -> count, all 13 present
  std::vector<OrderingScanRow> forbidden_hits;
};

/// Census of generator omega-orderings over every minimal triple
/// n1 < n2 < n3 <= bound. Non-minimal and gcd > 1 triples are skipped.
OrderingScanResult generator_ordering_scan(Int bound, Int budget = kDefaultSearchBudget);

}  // namespace omegacalc

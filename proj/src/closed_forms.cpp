#include "omegacalc/closed_forms.hpp"

#include <algorithm>
#include <numeric>

namespace omegacalc {

namespace {

Int ceil_div(Int a, Int b) { return (a + b - 1) / b; }

void check_two_gen(Int n1, Int n2) {
  if (n1 <= 1 || n2 <= 1) fail(errc::invalid_argument, "both generators must exceed 1");
  if (std::gcd(n1, n2) != 1)
    fail(errc::not_coprime, "generators must be coprime", std::gcd(n1, n2));
}

// Membership of n in <n1,n2> without building a sieve: n is a member iff the
// smallest b >= 0 with b*n2 == n (mod n1) satisfies b*n2 <= n.
bool two_gen_member(Int n1, Int n2, Int n) {
  if (n < 0) return false;
  for (Int b = 0; b < n1; ++b) {
    const Int v = b * n2;
    if (v > n) return false;
    if ((n - v) % n1 == 0) return true;
  }
  return false;
}

}  // namespace

Int omega_two_gen_from_factorization(Int n1, Int n2, Int a1, Int a2) {
  check_two_gen(n1, n2);
  if (a1 < 0 || a2 < 0) fail(errc::invalid_argument, "factorization coordinates must be >= 0");
  if (a1 == 0 && a2 == 0)
    fail(errc::zero_factorization, "the zero factorization has no omega value");
  return std::max(ceil_div(a2, n1) * n2 + a1, ceil_div(a1, n2) * n1 + a2);
}

ResidueTable build_residue_table(Int n1, Int n2, Int horizon) {
  check_two_gen(n1, n2);
  if (n1 >= n2) fail(errc::invalid_argument, "expected n1 < n2");
  ResidueTable table;
  table.n1 = n1;
  table.n2 = n2;
  table.a_of_r.assign(static_cast<std::size_t>(n1), 0);
  for (Int r = 1; r < n1; ++r) {
    Int a = 0;
    while ((a * n1) % n2 != r % n2) ++a;  // coprimality bounds a below n2
    table.a_of_r[static_cast<std::size_t>(r)] = a;
  }

  if (horizon == 0) horizon = 4 * n1 * n2;
  if (horizon < 2 * n1 * n2)
    fail(errc::invalid_argument, "horizon too small to certify the residue formula");
  const NumericalMonoid monoid = NumericalMonoid::from_generators({n1, n2});

  Int last_disagreement = 0;
  for (Int n = 1; n <= horizon; ++n) {
    if (!monoid.contains(n)) continue;
    const Int formula = n / n1 + table.a_of_r[static_cast<std::size_t>(n % n1)];
    if (omega(monoid, n).omega != formula) last_disagreement = n;
  }
  if (last_disagreement > horizon - n1 * n2)
    fail(errc::window_unstable,
         "residue formula still disagrees near the horizon; raise the horizon");

  // First member past the last disagreement.
  Int threshold = last_disagreement + 1;
  while (!monoid.contains(threshold)) ++threshold;
  table.validity_threshold = threshold;
  return table;
}

Int omega_two_gen_residue(const ResidueTable& table, Int n) {
  if (!two_gen_member(table.n1, table.n2, n))
    fail(errc::not_a_member, std::to_string(n) + " is not a member", n);
  if (n < table.validity_threshold)
    fail(errc::below_threshold,
         "residue formula is certified only from " + std::to_string(table.validity_threshold));
  return n / table.n1 + table.a_of_r[static_cast<std::size_t>(n % table.n1)];
}

std::vector<std::pair<Int, Int>> interval_generator_omegas(Int n, IntervalParity parity) {
  if (n < 2) fail(errc::invalid_argument, "interval formulas require n >= 2");
  if (parity == IntervalParity::odd)
    return {{2 * n - 1, n}, {2 * n, n + 1}, {2 * n + 1, n + 1}};
  return {{2 * n, n}, {2 * n + 1, n + 2}, {2 * n + 2, n + 1}};
}

std::string ordering_pattern(Int w1, Int w2, Int w3) {
  std::array<std::pair<Int, int>, 3> v{{{w1, 1}, {w2, 2}, {w3, 3}}};
  std::sort(v.begin(), v.end());
  std::string out = "w" + std::to_string(v[0].second);
  for (int i = 1; i < 3; ++i) {
    out += (v[static_cast<std::size_t>(i)].first == v[static_cast<std::size_t>(i - 1)].first)
               ? "="
               : "<";
    out += "w" + std::to_string(v[static_cast<std::size_t>(i)].second);
  }
  return out;
}

const std::vector<std::string>& all_ordering_patterns() {
  static const std::vector<std::string> patterns = [] {
    std::vector<std::string> out;
    // Every weak order on three labelled values shows up among these tuples.
    const Int samples[13][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {3, 1, 2}, {2, 3, 1},
                                {3, 2, 1}, {1, 1, 2}, {2, 2, 1}, {1, 2, 1}, {2, 1, 2},
                                {1, 2, 2}, {2, 1, 1}, {1, 1, 1}};
    for (const auto& s : samples) out.push_back(ordering_pattern(s[0], s[1], s[2]));
    std::sort(out.begin(), out.end());
    return out;
  }();
  return patterns;
}

const std::array<std::string, 3>& forbidden_ordering_patterns() {
  static const std::array<std::string, 3> patterns = {
      ordering_pattern(3, 2, 1),  // w1 > w2 > w3
      ordering_pattern(2, 2, 1),  // w1 = w2 > w3
      ordering_pattern(2, 3, 1),  // w3 < w1 < w2
  };
  return patterns;
}

OrderingScanResult generator_ordering_scan(Int bound, Int budget) {
  if (bound < 3) fail(errc::invalid_argument, "scan bound must be at least 3");
  OrderingScanResult result;
  result.bound = bound;
  for (const auto& p : all_ordering_patterns()) result.census[p] = 0;
  const auto& forbidden = forbidden_ordering_patterns();

  for (Int n1 = 2; n1 <= bound - 2; ++n1)
    for (Int n2 = n1 + 1; n2 <= bound - 1; ++n2)
      for (Int n3 = n2 + 1; n3 <= bound; ++n3) {
        if (std::gcd(std::gcd(n1, n2), n3) != 1) continue;
        if (NumericalMonoid::minimalize({n1, n2, n3}).size() != 3) continue;
        const NumericalMonoid monoid = NumericalMonoid::from_generators({n1, n2, n3});
        OrderingScanRow row;
        row.n1 = n1;
        row.n2 = n2;
        row.n3 = n3;
        row.w1 = omega(monoid, n1, budget).omega;
        row.w2 = omega(monoid, n2, budget).omega;
        row.w3 = omega(monoid, n3, budget).omega;
        row.pattern = ordering_pattern(row.w1, row.w2, row.w3);
        ++result.census[row.pattern];
        if (std::find(forbidden.begin(), forbidden.end(), row.pattern) != forbidden.end())
          result.forbidden_hits.push_back(row);
        result.rows.push_back(std::move(row));
      }
  return result;
}

}  // namespace omegacalc

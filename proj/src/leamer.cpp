#include "omegacalc/leamer.hpp"

#include <algorithm>
#include <string>

namespace omegacalc {

LeamerMonoid LeamerMonoid::create(NumericalMonoid gamma, Int s, LeamerBox box) {
  if (s < 1) fail(errc::invalid_argument, "step must be a positive integer");
  if (gamma.contains(s))
    fail(errc::step_in_gamma, "step " + std::to_string(s) + " lies in the monoid", s);
  if (box.n_max < 0 || box.k_max < 0) fail(errc::invalid_argument, "box must be non-negative");
  return LeamerMonoid(std::move(gamma), s, box);
}

bool LeamerMonoid::contains(Int n, Int k) const {
  if (n == 0 && k == 0) return true;
  if (n < 1 || k < 1) return false;
  for (Int i = 0; i <= k; ++i)
    if (!gamma_.contains(n + i * s_)) return false;
  return true;
}

std::vector<LeamerPoint> leamer_points(const LeamerMonoid& monoid) {
  const auto& box = monoid.box();
  std::vector<LeamerPoint> points{{0, 0}};
  for (Int n = 1; n <= box.n_max; ++n) {
    if (!monoid.gamma().contains(n)) continue;
    // run length is monotone: (n, k) in S forces (n, k-1) in S
    Int k = 1;
    while (k <= box.k_max && monoid.gamma().contains(n + k * monoid.s())) {
      points.emplace_back(n, k);
      ++k;
    }
  }
  std::sort(points.begin(), points.end());
  return points;
}

std::vector<LeamerPoint> leamer_irreducibles(const LeamerMonoid& monoid) {
  if (monoid.box().n_max <= monoid.gamma().frobenius())
    fail(errc::box_too_small, "box must extend past the Frobenius number " +
                                  std::to_string(monoid.gamma().frobenius()) +
                                  " to reach the dense region");
  const std::vector<LeamerPoint> points = leamer_points(monoid);
  std::vector<LeamerPoint> irreducibles;
  for (const auto& [n, k] : points) {
    if (n == 0 && k == 0) continue;
    if (k == 1) {  // parts would need both k-components >= 1
      irreducibles.emplace_back(n, k);
      continue;
    }
    bool reducible = false;
    for (Int n1 = 1; n1 < n && !reducible; ++n1)
      for (Int k1 = 1; k1 < k && !reducible; ++k1)
        reducible = monoid.contains(n1, k1) && monoid.contains(n - n1, k - k1);
    if (!reducible) irreducibles.emplace_back(n, k);
  }
  return irreducibles;
}

LeamerOmegaResult leamer_omega(const LeamerMonoid& monoid, Int n, Int k, Int node_budget,
                               Int cap_budget) {
  if (n == 0 && k == 0) fail(errc::zero_element, "omega of the identity is undefined");
  if (!monoid.contains(n, k))
    fail(errc::not_a_member,
         "(" + std::to_string(n) + "," + std::to_string(k) + ") is not a member");

  const std::vector<LeamerPoint> irreducibles = leamer_irreducibles(monoid);

  LeamerOmegaResult result;
  result.element = {n, k};

  // Cap each irreducible at the least multiple the element divides; the same
  // exchange argument as in the numerical case rules out higher multiplicities.
  std::vector<Int> caps(irreducibles.size(), 0);
  std::string failed;
  for (std::size_t i = 0; i < irreducibles.size(); ++i) {
    const auto& [un, uk] = irreducibles[i];
    Int m = 1;
    while (m <= cap_budget && !monoid.contains(m * un - n, m * uk - k)) ++m;
    if (m > cap_budget) {
      failed += " (" + std::to_string(un) + "," + std::to_string(uk) + ")";
      continue;
    }
    caps[i] = m;
    result.caps.emplace_back(irreducibles[i], m);
  }
  if (!failed.empty())
    fail(errc::cap_not_found, "no multiplicity cap within budget for:" + failed);

  std::vector<Int> counts(irreducibles.size(), 0);
  Int nodes = 0;

  auto record = [&](Int pn, Int pk, Int total) {
    if (!monoid.contains(pn - n, pk - k)) return;
    for (std::size_t i = 0; i < irreducibles.size(); ++i) {
      if (counts[i] == 0) continue;
      if (monoid.contains(pn - irreducibles[i].first - n, pk - irreducibles[i].second - k))
        return;  // dropping one copy keeps divisibility
    }
    LeamerBullet bullet;
    bullet.length = total;
    for (std::size_t i = 0; i < irreducibles.size(); ++i)
      for (Int c = 0; c < counts[i]; ++c) bullet.parts.push_back(irreducibles[i]);
    result.bullets.push_back(std::move(bullet));
  };

  // Sums of members stay members, so once dropping some chosen irreducible
  // keeps divisibility, every extension of the prefix fails too.
  auto doomed = [&](std::size_t upto, Int pn, Int pk) {
    for (std::size_t i = 0; i <= upto; ++i) {
      if (counts[i] == 0) continue;
      if (monoid.contains(pn - irreducibles[i].first - n, pk - irreducibles[i].second - k))
        return true;
    }
    return false;
  };

  auto rec = [&](auto&& self, std::size_t i, Int pn, Int pk, Int total) -> void {
    if (++nodes > node_budget)
      fail(errc::budget_exceeded, "leamer bullet search exceeds its node budget");
    if (i == irreducibles.size()) {
      if (total > 0) record(pn, pk, total);
      return;
    }
    const auto& [un, uk] = irreducibles[i];
    for (Int c = 0; c <= caps[i]; ++c) {
      counts[i] = c;
      const Int qn = pn + c * un;
      const Int qk = pk + c * uk;
      if (c > 0 && doomed(i, qn, qk)) continue;
      self(self, i + 1, qn, qk, total + c);
    }
    counts[i] = 0;
  };
  rec(rec, 0, 0, 0, 0);

  for (const auto& bullet : result.bullets) result.omega = std::max(result.omega, bullet.length);
  for (const auto& bullet : result.bullets)
    if (bullet.length == result.omega) result.maximal_bullets.push_back(bullet);
  return result;
}

}  // namespace omegacalc

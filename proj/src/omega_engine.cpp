#include "omegacalc/omega_engine.hpp"

#include <algorithm>
#include <string>

namespace omegacalc {

namespace {

void check_element(const NumericalMonoid& monoid, Int n) {
  if (n == 0) fail(errc::zero_element, "omega is defined for non-unit elements only");
  if (!monoid.contains(n)) fail(errc::not_a_member, std::to_string(n) + " is not a member", n);
}

struct BoxScan {
  const NumericalMonoid& monoid;
  const std::vector<Int>& gens;
  const std::vector<Int>& bounds;
  Int n;
  Int frob;
  std::vector<Int> suffix_weight;  // max value addable from coordinate i on
  std::vector<Int> coords;
  std::vector<FactorizationVector>* out;

  BoxScan(const NumericalMonoid& m, const std::vector<Int>& b, Int n_,
          std::vector<FactorizationVector>* sink)
      : monoid(m), gens(m.generators()), bounds(b), n(n_), frob(m.frobenius()), out(sink) {
    const std::size_t k = gens.size();
    suffix_weight.assign(k + 1, 0);
    for (std::size_t i = k; i-- > 0;)
      suffix_weight[i] = suffix_weight[i + 1] + bounds[i] * gens[i];
    coords.assign(k, 0);
  }

  void run() { scan(0, 0, -1); }

  // first_active: index of the smallest generator already used, or -1.
  // Two sound prunes:
  //  - once value - gens[first_active] - n exceeds the Frobenius number, every
  //    completion keeps divisibility after dropping that generator, so no
  //    completion is a bullet;
  //  - a prefix that cannot reach n even with the full remaining box fails
  //    divisibility outright.
  void scan(std::size_t i, Int value, int first_active) {
    if (i == gens.size()) {
      leaf(value);
      return;
    }
    const Int g = gens[i];
    for (Int a = 0; a <= bounds[i]; ++a) {
      const Int v = value + a * g;
      const int fa = (a > 0 && first_active < 0) ? static_cast<int>(i) : first_active;
      if (fa >= 0 && v - gens[static_cast<std::size_t>(fa)] - n > frob) break;
      if (v + suffix_weight[i + 1] < n) continue;
      coords[i] = a;
      scan(i + 1, v, fa);
    }
    coords[i] = 0;
  }

  void leaf(Int value) {
    if (!monoid.contains(value - n)) return;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (coords[j] > 0 && monoid.contains(value - gens[j] - n)) return;
    out->push_back(FactorizationVector::of(coords, gens));
  }
};

}  // namespace

std::vector<Int> bullet_bounds(const NumericalMonoid& monoid, Int n) {
  check_element(monoid, n);
  std::vector<Int> bounds;
  bounds.reserve(monoid.generator_count());
  for (Int g : monoid.generators()) {
    Int b = (n + g - 1) / g;  // smaller b gives a negative difference
    if (b < 1) b = 1;
    while (!monoid.contains(b * g - n)) ++b;  // b <= n is guaranteed
    bounds.push_back(b);
  }
  return bounds;
}

bool is_bullet(const NumericalMonoid& monoid, Int n, const std::vector<Int>& coords) {
  const auto& gens = monoid.generators();
  if (coords.size() != gens.size())
    fail(errc::dimension_mismatch, "coordinate count does not match generator count");
  Int value = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0) fail(errc::invalid_argument, "negative coordinate");
    value += coords[i] * gens[i];
  }
  if (!monoid.contains(value - n)) return false;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] > 0 && monoid.contains(value - gens[i] - n)) return false;
  return true;
}

BulletSet bullets(const NumericalMonoid& monoid, Int n, Int budget) {
  BulletSet result;
  result.element = n;
  result.bounds = bullet_bounds(monoid, n);
  if (saturating_box_size(result.bounds, 1, budget) > budget)
    fail(errc::budget_exceeded,
         "bullet box for " + std::to_string(n) + " exceeds the search budget of " +
             std::to_string(budget) + " candidate vectors");
  BoxScan scan(monoid, result.bounds, n, &result.bullets);
  scan.run();
  return result;
}

OmegaResult omega(const NumericalMonoid& monoid, Int n, Int budget) {
  OmegaResult result;
  result.element = n;
  result.bullet_set = bullets(monoid, n, budget);
  for (const auto& b : result.bullet_set.bullets) result.omega = std::max(result.omega, b.length);
  for (const auto& b : result.bullet_set.bullets)
    if (b.length == result.omega) result.maximal_bullets.push_back(b);
  return result;
}

Int omega_oracle(const NumericalMonoid& monoid, Int n, Int budget) {
  const std::vector<Int> bounds = bullet_bounds(monoid, n);
  const auto& gens = monoid.generators();
  const std::size_t k = gens.size();
  Int length_cap = 0;
  for (Int b : bounds) length_cap += b;

  // Total vectors enumerated: C(length_cap + k, k) - 1.
  {
    Int count = 1;
    bool over = false;
    for (std::size_t i = 1; i <= k; ++i) {
      if (count > budget) {
        over = true;
        break;
      }
      count = count * (length_cap + static_cast<Int>(i)) / static_cast<Int>(i);
    }
    if (over || count - 1 > budget)
      fail(errc::budget_exceeded, "oracle enumeration exceeds its budget");
  }

  std::vector<Int> coords(k, 0);
  // All vectors of total length exactly `remaining` from coordinate i on.
  auto any_bullet = [&](auto&& self, std::size_t i, Int remaining, Int value) -> bool {
    if (i + 1 == k) {
      coords[i] = remaining;
      const Int v = value + remaining * gens[i];
      bool ok = monoid.contains(v - n);
      if (ok) {
        for (std::size_t j = 0; j < k && ok; ++j)
          if (coords[j] > 0 && monoid.contains(v - gens[j] - n)) ok = false;
      }
      coords[i] = 0;
      return ok;
    }
    for (Int a = 0; a <= remaining; ++a) {
      coords[i] = a;
      if (self(self, i + 1, remaining - a, value + a * gens[i])) {
        coords[i] = 0;
        return true;
      }
    }
    coords[i] = 0;
    return false;
  };

  Int best = 0;
  for (Int len = 1; len <= length_cap; ++len)
    if (any_bullet(any_bullet, 0, len, 0)) best = len;
  return best;
}

}  // namespace omegacalc

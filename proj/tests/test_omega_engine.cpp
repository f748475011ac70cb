#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "omegacalc/omega_engine.hpp"

using namespace omegacalc;

namespace {

std::vector<std::vector<Int>> coords_of(const std::vector<FactorizationVector>& bullets) {
  std::vector<std::vector<Int>> out;
  for (const auto& b : bullets) out.push_back(b.coords);
  return out;
}

}  // namespace

TEST_CASE("bullet bounds") {
  const NumericalMonoid mcnugget = NumericalMonoid::from_generators({6, 9, 20});
  CHECK(bullet_bounds(mcnugget, 35) == std::vector<Int>{14, 9, 4});
  CHECK(bullet_bounds(mcnugget, 6) == std::vector<Int>{1, 2, 3});
  const NumericalMonoid m37 = NumericalMonoid::from_generators({3, 7});
  CHECK(bullet_bounds(m37, 9) == std::vector<Int>{3, 3});
  CHECK_THROWS_AS(bullet_bounds(mcnugget, 0), Error);
  CHECK_THROWS_AS(bullet_bounds(mcnugget, 5), Error);
}

TEST_CASE("bound vectors are bullets and anything beyond a bound is not") {
  for (const auto& gens : {std::vector<Int>{3, 7}, {6, 9, 20}, {11, 13, 15}}) {
    const NumericalMonoid m = NumericalMonoid::from_generators(gens);
    for (Int n : {gens[0], gens[0] + gens[1], 3 * gens.back() + gens[0]}) {
      if (!m.contains(n)) continue;
      const auto bounds = bullet_bounds(m, n);
      for (std::size_t i = 0; i < bounds.size(); ++i) {
        std::vector<Int> unit(bounds.size(), 0);
        unit[i] = bounds[i];
        CHECK(is_bullet(m, n, unit));
        // exceeding the cap with divisibility intact can never be a bullet
        unit[i] = bounds[i] + 1;
        Int value = unit[i] * gens[i];
        if (m.contains(value - n)) CHECK_FALSE(is_bullet(m, n, unit));
      }
    }
  }
}

TEST_CASE("is_bullet on the worked example") {
  const NumericalMonoid mcnugget = NumericalMonoid::from_generators({6, 9, 20});
  CHECK(is_bullet(mcnugget, 6, {0, 0, 3}));
  CHECK_FALSE(is_bullet(mcnugget, 6, {10, 0, 0}));  // ten copies of 6 is not a bullet for 6
  CHECK_FALSE(is_bullet(mcnugget, 6, {0, 0, 0}));
  CHECK_THROWS_AS(is_bullet(mcnugget, 6, {1, 2}), Error);
}

TEST_CASE("bullet sets match the published examples") {
  const NumericalMonoid mcnugget = NumericalMonoid::from_generators({6, 9, 20});

  const BulletSet b35 = bullets(mcnugget, 35);
  const std::vector<std::vector<Int>> expected35 = {
      {0, 0, 4}, {0, 3, 1}, {0, 9, 0}, {1, 1, 1}, {2, 7, 0},
      {4, 0, 1}, {5, 5, 0}, {8, 3, 0}, {11, 1, 0}, {14, 0, 0}};
  CHECK(coords_of(b35.bullets) == expected35);

  const BulletSet b6 = bullets(mcnugget, 6);
  CHECK(coords_of(b6.bullets) ==
        std::vector<std::vector<Int>>{{0, 0, 3}, {0, 2, 0}, {1, 0, 0}});

  const NumericalMonoid m37 = NumericalMonoid::from_generators({3, 7});
  CHECK(coords_of(bullets(m37, 9).bullets) ==
        std::vector<std::vector<Int>>{{0, 3}, {3, 0}});
}

TEST_CASE("pruned scan equals the unpruned box sweep") {
  for (const auto& gens : {std::vector<Int>{3, 7}, {6, 9, 20}, {11, 13, 15}, {4, 6, 9}}) {
    const NumericalMonoid m = NumericalMonoid::from_generators(gens);
    for (Int n = 1; n <= m.frobenius() + 2 * gens.back(); ++n) {
      if (!m.contains(n)) continue;
      CHECK(coords_of(bullets(m, n).bullets) == testing::naive_bullet_scan(m, n));
    }
  }
}

TEST_CASE("omega on the published examples") {
  const NumericalMonoid mcnugget = NumericalMonoid::from_generators({6, 9, 20});
  const OmegaResult w35 = omega(mcnugget, 35);
  CHECK(w35.omega == 14);
  REQUIRE(w35.maximal_bullets.size() == 1);
  CHECK(w35.maximal_bullets[0].coords == std::vector<Int>{14, 0, 0});

  CHECK(omega(mcnugget, 6).omega == 3);

  const NumericalMonoid m37 = NumericalMonoid::from_generators({3, 7});
  const OmegaResult w9 = omega(m37, 9);
  CHECK(w9.omega == 3);
  REQUIRE(w9.maximal_bullets.size() == 2);  // ties are all reported
  CHECK(w9.maximal_bullets[0].coords == std::vector<Int>{0, 3});
  CHECK(w9.maximal_bullets[1].coords == std::vector<Int>{3, 0});

  const NumericalMonoid m11 = NumericalMonoid::from_generators({11, 13, 15});
  const OmegaResult w58 = omega(m11, 58);
  CHECK(w58.omega == 11);
  bool found = false;
  for (const auto& b : w58.maximal_bullets) found = found || b.coords == std::vector<Int>{5, 6, 0};
  CHECK(found);

  CHECK_THROWS_AS(omega(mcnugget, 0), Error);
  CHECK_THROWS_AS(omega(mcnugget, 34), Error);
}

TEST_CASE("oracle equals the engine across a horizon") {
  for (const auto& gens : {std::vector<Int>{3, 7}, {6, 9, 20}}) {
    const NumericalMonoid m = NumericalMonoid::from_generators(gens);
    const Int horizon = m.frobenius() + 3 * gens.back();
    for (Int n = 1; n <= horizon; ++n) {
      if (!m.contains(n)) continue;
      CHECK(omega(m, n).omega == omega_oracle(m, n));
    }
  }
}

TEST_CASE("oracle spot values") {
  const NumericalMonoid mcnugget = NumericalMonoid::from_generators({6, 9, 20});
  CHECK(omega_oracle(mcnugget, 6) == 3);
  const NumericalMonoid m37 = NumericalMonoid::from_generators({3, 7});
  CHECK(omega_oracle(m37, 3) == 3);   // generators attain their own value
  CHECK(omega_oracle(m37, 10) == 8);  // max{ceil(1/3)*7+1, ceil(1/7)*3+1}
}

TEST_CASE("omega is subadditive") {
  auto rng = testing::seeded_rng();
  for (const auto& gens : {std::vector<Int>{3, 7}, {6, 9, 20}, {11, 13, 15}}) {
    const NumericalMonoid m = NumericalMonoid::from_generators(gens);
    for (int trial = 0; trial < 60; ++trial) {
      const Int x = testing::random_member(m, m.frobenius() + 40, rng);
      const Int y = testing::random_member(m, m.frobenius() + 40, rng);
      CHECK(omega(m, x + y).omega <= omega(m, x).omega + omega(m, y).omega);
    }
  }
}

TEST_CASE("omega dominates factorization lengths") {
  const NumericalMonoid m = NumericalMonoid::from_generators({6, 9, 20});
  for (Int n = 6; n <= 90; ++n) {
    if (!m.contains(n)) continue;
    Int longest = 0;
    for (const auto& f : m.factorizations(n)) longest = std::max(longest, f.length);
    CHECK(omega(m, n).omega >= longest);
  }
}

TEST_CASE("omega is unbounded along multiples of the smallest generator") {
  const NumericalMonoid m = NumericalMonoid::from_generators({6, 9, 20});
  for (Int k = 1; k <= 20; ++k) CHECK(omega(m, k * 6).omega >= k);
}

TEST_CASE("in two-generator monoids only the generators satisfy omega(x) = x") {
  for (const auto& gens : {std::vector<Int>{3, 7}, {2, 3}, {4, 9}, {5, 8}}) {
    const NumericalMonoid m = NumericalMonoid::from_generators(gens);
    const Int hi = m.frobenius() + gens[0] * gens[1];
    for (Int x = 1; x <= hi; ++x) {
      if (!m.contains(x)) continue;
      const bool is_generator = x == gens[0] || x == gens[1];
      CHECK((omega(m, x).omega == x) == is_generator);
    }
  }
}

TEST_CASE("budget overruns are hard errors") {
  const NumericalMonoid m = NumericalMonoid::from_generators({6, 9, 20});
  CHECK_THROWS_AS(bullets(m, 35, 100), Error);
  try {
    omega(m, 35, 100);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == errc::budget_exceeded);
  }
  CHECK_THROWS_AS(omega_oracle(m, 35, 10), Error);
}

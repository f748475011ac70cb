#include "omegacalc/acm.hpp"

#include <algorithm>
#include <string>

namespace omegacalc {

namespace {

std::vector<std::pair<Int, Int>> trial_factor(Int n) {
  std::vector<std::pair<Int, Int>> factors;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    Int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    if (n % p == 0) return false;
  return true;
}

std::vector<Int> divisors_of(const std::vector<std::pair<Int, Int>>& factors) {
  std::vector<Int> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    Int power = 1;
    for (Int i = 1; i <= e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

Int mod_inverse(Int c, Int b) {
  Int t = 0, new_t = 1, r = b, new_r = c % b;
  while (new_r != 0) {
    const Int q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) fail(errc::invalid_argument, "value not invertible mod b");
  return ((t % b) + b) % b;
}

// Reducibility given the full prime factorization of u.
bool irreducible_given_factors(const ArithmeticCongruenceMonoid& monoid, Int u,
                               const std::vector<std::pair<Int, Int>>& factors) {
  for (Int d : divisors_of(factors)) {
    if (d <= 1 || d >= u) continue;
    if (monoid.contains(d) && monoid.contains(u / d)) return false;
  }
  return true;
}

}  // namespace

ArithmeticCongruenceMonoid ArithmeticCongruenceMonoid::create(Int a, Int b) {
  if (a < 1 || b < 1 || a > b) fail(errc::invalid_argument, "need 1 <= a <= b");
  if ((a * a - a) % b != 0)
    fail(errc::not_idempotent,
         "a^2 must be congruent to a mod b, got a = " + std::to_string(a) +
             ", b = " + std::to_string(b));
  return ArithmeticCongruenceMonoid(a, b);
}

bool ArithmeticCongruenceMonoid::is_irreducible(Int n) const {
  if (!contains(n)) fail(errc::not_a_member, std::to_string(n) + " is not a member", n);
  if (n == 1) fail(errc::unit_element, "1 is the unit");
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    if (contains(d) && contains(n / d)) return false;
  }
  return true;
}

std::vector<std::vector<Int>> ArithmeticCongruenceMonoid::factorizations(Int n,
                                                                         Int budget) const {
  if (!contains(n)) fail(errc::not_a_member, std::to_string(n) + " is not a member", n);
  if (n == 1) fail(errc::unit_element, "1 is the unit");
  if (n > budget) fail(errc::budget_exceeded, "element exceeds the factoring budget");

  const auto divs = divisors_of(trial_factor(n));
  std::vector<Int> irreducible_divisors;
  for (Int d : divs)
    if (d > 1 && contains(d) && is_irreducible(d)) irreducible_divisors.push_back(d);

  std::vector<std::vector<Int>> out;
  std::vector<Int> parts;
  auto rec = [&](auto&& self, Int rest, std::size_t min_idx) -> void {
    if (rest == 1) {
      out.push_back(parts);
      return;
    }
    for (std::size_t i = min_idx; i < irreducible_divisors.size(); ++i) {
      const Int d = irreducible_divisors[i];
      if (d > rest) break;
      if (rest % d != 0) continue;
      const Int quotient = rest / d;
      if (quotient != 1 && !contains(quotient)) continue;
      parts.push_back(d);
      self(self, quotient, i);
      parts.pop_back();
    }
  };
  rec(rec, n, 0);
  return out;
}

AcmOmegaResult acm_omega(const ArithmeticCongruenceMonoid& monoid, Int x, Int budget) {
  if (!monoid.regular_unit())
    fail(errc::not_regular_unit,
         "omega search requires a = 1; divisibility in singular monoids does not reduce to "
         "integer divisibility");
  if (!monoid.contains(x)) fail(errc::not_a_member, std::to_string(x) + " is not a member", x);
  if (x == 1) fail(errc::unit_element, "1 is the unit");
  if (x > kAcmFactorBudget)
    fail(errc::factorization_failed, "element exceeds the trial-division budget");

  const Int b = monoid.b();
  const auto primes = trial_factor(x);
  const std::size_t width = primes.size();
  Int big_omega = 0;
  for (const auto& [p, e] : primes) big_omega += e;

  // Candidate irreducibles: products over the primes of x, padded into the
  // right congruence class by one canonical auxiliary prime when needed.
  struct Candidate {
    Int value = 0;
    std::vector<Int> contrib;  // exponent delivered on each prime of x
  };
  std::vector<Candidate> candidates;
  std::vector<Int> f(width, 0);
  auto emit = [&]() {
    Int m = 1;
    std::vector<std::pair<Int, Int>> factors;
    for (std::size_t i = 0; i < width; ++i) {
      for (Int j = 0; j < f[i]; ++j) m *= primes[i].first;
      if (f[i] > 0) factors.emplace_back(primes[i].first, f[i]);
    }
    Int u = m;
    if (m % b != 1 % b) {
      const Int inv = mod_inverse(m % b, b);
      Int q = inv <= 1 ? inv + b : inv;
      while (!is_prime(q) || x % q == 0) q += b;
      u = m * q;
      factors.emplace_back(q, 1);
      std::sort(factors.begin(), factors.end());
    }
    if (irreducible_given_factors(monoid, u, factors)) candidates.push_back({u, f});
  };
  auto gen = [&](auto&& self, std::size_t i) -> void {
    if (i == width) {
      bool nonzero = false;
      for (Int v : f) nonzero = nonzero || v > 0;
      if (nonzero) emit();
      return;
    }
    for (Int v = 0; v <= primes[i].second; ++v) {
      f[i] = v;
      self(self, i + 1);
    }
    f[i] = 0;
  };
  gen(gen, 0);
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& c) { return a.value < c.value; });

  AcmOmegaResult result;
  result.element = x;

  std::vector<Int> counts(candidates.size(), 0);
  std::vector<Int> cover(width, 0);
  Int nodes = 0;

  auto record = [&](Int total) {
    for (std::size_t e = 0; e < width; ++e)
      if (cover[e] < primes[e].second) return;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (counts[c] == 0) continue;
      bool critical = false;
      for (std::size_t e = 0; e < width && !critical; ++e)
        critical = cover[e] - candidates[c].contrib[e] < primes[e].second;
      if (!critical) return;
    }
    std::vector<Int> bullet;
    for (std::size_t c = 0; c < candidates.size(); ++c)
      for (Int i = 0; i < counts[c]; ++i) bullet.push_back(candidates[c].value);
    result.bullets.push_back(std::move(bullet));
  };

  auto rec = [&](auto&& self, std::size_t c, Int total) -> void {
    if (++nodes > budget) fail(errc::budget_exceeded, "acm bullet search exceeds its budget");
    if (c == candidates.size()) {
      if (total > 0) record(total);
      return;
    }
    for (Int count = 0; total + count <= big_omega; ++count) {
      counts[c] = count;
      if (count > 0)
        for (std::size_t e = 0; e < width; ++e) cover[e] += candidates[c].contrib[e];
      self(self, c + 1, total + count);
    }
    for (Int count = counts[c]; count > 0; --count)
      for (std::size_t e = 0; e < width; ++e) cover[e] -= candidates[c].contrib[e];
    counts[c] = 0;
  };
  rec(rec, 0, 0);

  for (const auto& bullet : result.bullets)
    result.omega = std::max(result.omega, static_cast<Int>(bullet.size()));
  for (const auto& bullet : result.bullets)
    if (static_cast<Int>(bullet.size()) == result.omega) result.maximal_bullets.push_back(bullet);
  return result;
}

}  // namespace omegacalc

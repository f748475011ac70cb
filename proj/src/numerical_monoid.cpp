#include "omegacalc/numerical_monoid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace omegacalc {

FactorizationVector FactorizationVector::of(std::vector<Int> coords,
                                            const std::vector<Int>& generators) {
  if (coords.size() != generators.size())
    fail(errc::dimension_mismatch, "coordinate count does not match generator count");
  Int value = 0;
  Int length = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0) fail(errc::invalid_argument, "negative coordinate in factorization vector");
    value += coords[i] * generators[i];
    length += coords[i];
  }
  return FactorizationVector{std::move(coords), value, length};
}

namespace {

// Bounded coin-problem table: can `target` be written over `gens`?
bool representable(Int target, const std::vector<Int>& gens) {
  if (gens.empty()) return target == 0;
  std::vector<char> reach(static_cast<std::size_t>(target) + 1, 0);
  reach[0] = 1;
  for (Int v = 1; v <= target; ++v) {
    for (Int g : gens) {
      if (g > v) break;
      if (reach[static_cast<std::size_t>(v - g)]) {
        reach[static_cast<std::size_t>(v)] = 1;
        break;
      }
    }
  }
  return reach[static_cast<std::size_t>(target)] != 0;
}

}  // namespace

std::vector<Int> NumericalMonoid::minimalize(std::vector<Int> generators) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<Int> kept;
  for (Int g : generators) {
    if (!kept.empty() && representable(g, kept)) continue;
    kept.push_back(g);
  }
  return kept;
}

NumericalMonoid NumericalMonoid::from_generators(std::vector<Int> raw_generators) {
  if (raw_generators.empty()) fail(errc::empty_generators, "generator list is empty");
  for (Int g : raw_generators)
    if (g < 1) fail(errc::invalid_argument, "generators must be positive integers");
  Int d = 0;
  for (Int g : raw_generators) d = std::gcd(d, g);
  if (d != 1)
    fail(errc::gcd_not_one, "generators have gcd " + std::to_string(d) +
                                "; divide them by it to get an isomorphic monoid",
         d);
  std::vector<Int> gens = minimalize(std::move(raw_generators));
  if (gens.front() == 1)
    fail(errc::degenerate_monoid, "1 generates all of N; no non-trivial irreducibles");
  return NumericalMonoid(std::move(gens));
}

NumericalMonoid::NumericalMonoid(std::vector<Int> minimal_generators)
    : generators_(std::move(minimal_generators)) {
  // Sieve upward until n1 consecutive members appear; past that point every
  // integer is a member, so the last gap seen is the Frobenius number.
  const Int n1 = generators_.front();
  Int bound = std::max<Int>(2 * generators_.back(), 16);
  for (;;) {
    table_.assign(static_cast<std::size_t>(bound) + 1, 0);
    table_[0] = 1;
    Int run = 0;
    Int last_gap = 0;
    Int stop = -1;
    for (Int i = 1; i <= bound; ++i) {
      char member = 0;
      for (Int g : generators_) {
        if (g > i) break;
        if (table_[static_cast<std::size_t>(i - g)]) {
          member = 1;
          break;
        }
      }
      table_[static_cast<std::size_t>(i)] = member;
      if (member) {
        if (++run == n1) {
          stop = i;
          break;
        }
      } else {
        run = 0;
        last_gap = i;
      }
    }
    if (stop > 0) {
      frobenius_ = last_gap;
      table_.resize(static_cast<std::size_t>(frobenius_) + 1);
      return;
    }
    bound *= 2;  // gcd 1 guarantees termination
  }
}

bool NumericalMonoid::divides(Int a, Int b) const {
  if (!contains(a)) fail(errc::not_a_member, std::to_string(a) + " is not a member", a);
  if (!contains(b)) fail(errc::not_a_member, std::to_string(b) + " is not a member", b);
  return contains(b - a);
}

std::vector<FactorizationVector> NumericalMonoid::factorizations(Int n) const {
  if (!contains(n)) fail(errc::not_a_member, std::to_string(n) + " is not a member", n);
  std::vector<FactorizationVector> out;
  const std::size_t k = generators_.size();
  std::vector<Int> coords(k, 0);

  auto rec = [&](auto&& self, std::size_t i, Int remaining) -> void {
    if (i + 1 == k) {
      if (remaining % generators_[i] == 0) {
        coords[i] = remaining / generators_[i];
        out.push_back(FactorizationVector::of(coords, generators_));
        coords[i] = 0;
      }
      return;
    }
    const Int g = generators_[i];
    for (Int a = 0; a * g <= remaining; ++a) {
      coords[i] = a;
      self(self, i + 1, remaining - a * g);
    }
    coords[i] = 0;
  };
  rec(rec, 0, n);
  return out;
}

}  // namespace omegacalc

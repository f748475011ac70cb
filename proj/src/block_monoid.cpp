#include "omegacalc/block_monoid.hpp"

#include <algorithm>
#include <string>

namespace omegacalc {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Int> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (Int d : factors_)
    if (d < 2) fail(errc::invalid_argument, "invariant factors must be >= 2");
  strides_.resize(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    strides_[i] = order_;
    if (order_ > (1LL << 40) / factors_[i])
      fail(errc::invalid_argument, "group order too large");
    order_ *= factors_[i];
  }
}

void FiniteAbelianGroup::check_element(Int id) const {
  if (id < 0 || id >= order_)
    fail(errc::element_out_of_range, "element id " + std::to_string(id) + " outside group", id);
}

std::vector<Int> FiniteAbelianGroup::tuple_of(Int id) const {
  check_element(id);
  std::vector<Int> t(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    t[i] = (id / strides_[i]) % factors_[i];
  }
  return t;
}

Int FiniteAbelianGroup::id_of(const std::vector<Int>& tuple) const {
  if (tuple.size() != factors_.size())
    fail(errc::dimension_mismatch, "tuple rank does not match the group");
  Int id = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    Int x = tuple[i] % factors_[i];
    if (x < 0) x += factors_[i];
    id += x * strides_[i];
  }
  return id;
}

Int FiniteAbelianGroup::add(Int a, Int b) const {
  check_element(a);
  check_element(b);
  Int id = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Int xa = (a / strides_[i]) % factors_[i];
    const Int xb = (b / strides_[i]) % factors_[i];
    id += ((xa + xb) % factors_[i]) * strides_[i];
  }
  return id;
}

Int FiniteAbelianGroup::scale(Int k, Int a) const {
  check_element(a);
  if (k < 0) fail(errc::invalid_argument, "scale factor must be >= 0");
  Int id = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Int xa = (a / strides_[i]) % factors_[i];
    id += ((xa * (k % factors_[i])) % factors_[i]) * strides_[i];
  }
  return id;
}

Int FiniteAbelianGroup::negate(Int a) const {
  check_element(a);
  Int id = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Int xa = (a / strides_[i]) % factors_[i];
    id += ((factors_[i] - xa) % factors_[i]) * strides_[i];
  }
  return id;
}

bool is_zero_sum(const FiniteAbelianGroup& group, const std::map<Int, Int>& items) {
  Int sum = 0;
  for (const auto& [id, m] : items) {
    group.check_element(id);
    if (m < 0) fail(errc::invalid_argument, "negative multiplicity");
    sum = group.add(sum, group.scale(m, id));
  }
  return sum == 0;
}

ZeroSumSequence ZeroSumSequence::make(const FiniteAbelianGroup& group,
                                      const std::map<Int, Int>& items) {
  if (!is_zero_sum(group, items)) fail(errc::not_zero_sum, "multiset does not sum to identity");
  ZeroSumSequence block;
  for (const auto& [id, m] : items) {
    if (m == 0) continue;
    block.mult[id] = m;
    block.length += m;
  }
  return block;
}

namespace {

// Proper non-empty zero-sum sub-multiset test, by direct subset scan.
bool has_proper_zero_subsum(const FiniteAbelianGroup& group,
                            const std::vector<std::pair<Int, Int>>& items) {
  bool found = false;
  auto rec = [&](auto&& self, std::size_t i, Int sum, Int taken, Int dropped) -> void {
    if (found) return;
    if (i == items.size()) {
      if (taken > 0 && dropped > 0 && sum == 0) found = true;
      return;
    }
    const auto [id, m] = items[i];
    for (Int c = 0; c <= m && !found; ++c)
      self(self, i + 1, group.add(sum, group.scale(c, id)), taken + c, dropped + (m - c));
  };
  rec(rec, 0, 0, 0, 0);
  return found;
}

}  // namespace

std::vector<ZeroSumSequence> minimal_zero_sum_sequences(const FiniteAbelianGroup& group,
                                                        Int budget) {
  if (group.order() > 64)
    fail(errc::budget_exceeded, "group order " + std::to_string(group.order()) +
                                    " exceeds the block enumeration budget (64)");
  Int cap = 1;
  for (Int d : group.invariant_factors()) cap += d - 1;

  // Up-front size estimate: multiplicity vectors over the non-zero elements
  // with total at most cap.
  {
    const Int slots = group.order() - 1;
    Int count = 1;
    for (Int i = 1; i <= slots; ++i) {
      if (count > budget) break;
      count = count * (cap + i) / i;
    }
    if (count > budget) fail(errc::budget_exceeded, "block enumeration exceeds its budget");
  }

  std::vector<ZeroSumSequence> out;
  out.push_back(ZeroSumSequence::make(group, {{0, 1}}));  // the identity block {0}

  // Blocks containing 0 other than {0} are never minimal, so enumerate over
  // the non-zero elements only.
  std::vector<std::pair<Int, Int>> chosen;
  Int nodes = 0;
  auto rec = [&](auto&& self, Int next_id, Int sum, Int length) -> void {
    if (++nodes > budget) fail(errc::budget_exceeded, "block enumeration exceeds its budget");
    if (next_id == group.order()) {
      if (length > 0 && sum == 0 && !has_proper_zero_subsum(group, chosen)) {
        ZeroSumSequence block;
        for (const auto& [id, m] : chosen)
          if (m > 0) {
            block.mult[id] = m;
            block.length += m;
          }
        out.push_back(std::move(block));
      }
      return;
    }
    for (Int c = 0; length + c <= cap; ++c) {
      if (c > 0) chosen.emplace_back(next_id, c);
      self(self, next_id + 1, group.add(sum, group.scale(c, next_id)), length + c);
      if (c > 0) chosen.pop_back();
    }
  };
  rec(rec, 1, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool block_divides(const FiniteAbelianGroup& group, const ZeroSumSequence& x,
                   const ZeroSumSequence& y) {
  for (const auto& [id, m] : x.mult) {
    group.check_element(id);
    const auto it = y.mult.find(id);
    if (it == y.mult.end() || it->second < m) return false;
  }
  return true;
}

BlockOmegaResult block_omega(const FiniteAbelianGroup& group, const ZeroSumSequence& x,
                             Int budget) {
  if (x.length == 0) fail(errc::unit_element, "omega of the empty block is undefined");

  const std::vector<ZeroSumSequence> irreducibles = minimal_zero_sum_sequences(group, budget);
  std::vector<ZeroSumSequence> candidates;
  for (const auto& u : irreducibles) {
    bool shares = false;
    for (const auto& [id, m] : u.mult)
      if (x.mult.count(id)) {
        shares = true;
        break;
      }
    if (shares) candidates.push_back(u);
  }

  // Need-indexed views of x and of each candidate.
  std::vector<Int> need_ids;
  std::vector<Int> need;
  for (const auto& [id, m] : x.mult) {
    need_ids.push_back(id);
    need.push_back(m);
  }
  const std::size_t width = need_ids.size();
  std::vector<std::vector<Int>> contrib(candidates.size(), std::vector<Int>(width, 0));
  for (std::size_t c = 0; c < candidates.size(); ++c)
    for (std::size_t e = 0; e < width; ++e) {
      const auto it = candidates[c].mult.find(need_ids[e]);
      contrib[c][e] = (it == candidates[c].mult.end()) ? 0 : it->second;
    }

  BlockOmegaResult result;
  result.element = x;

  std::vector<Int> counts(candidates.size(), 0);
  std::vector<Int> cover(width, 0);
  Int nodes = 0;

  auto record = [&](Int total) {
    for (std::size_t e = 0; e < width; ++e)
      if (cover[e] < need[e]) return;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (counts[c] == 0) continue;
      bool critical = false;
      for (std::size_t e = 0; e < width && !critical; ++e)
        critical = cover[e] - contrib[c][e] < need[e];
      if (!critical) return;  // dropping one copy of candidate c keeps divisibility
    }
    BlockBullet bullet;
    bullet.length = total;
    for (std::size_t c = 0; c < candidates.size(); ++c)
      for (Int i = 0; i < counts[c]; ++i) bullet.parts.push_back(candidates[c]);
    result.bullets.push_back(std::move(bullet));
  };

  auto rec = [&](auto&& self, std::size_t c, Int total) -> void {
    if (++nodes > budget) fail(errc::budget_exceeded, "block bullet search exceeds its budget");
    if (c == candidates.size()) {
      if (total > 0) record(total);
      return;
    }
    for (Int count = 0; total + count <= x.length; ++count) {
      counts[c] = count;
      if (count > 0)
        for (std::size_t e = 0; e < width; ++e) cover[e] += contrib[c][e];
      self(self, c + 1, total + count);
    }
    for (Int count = counts[c]; count > 0; --count)
      for (std::size_t e = 0; e < width; ++e) cover[e] -= contrib[c][e];
    counts[c] = 0;
  };
  rec(rec, 0, 0);

  for (const auto& b : result.bullets) result.omega = std::max(result.omega, b.length);
  for (const auto& b : result.bullets)
    if (b.length == result.omega) result.maximal_bullets.push_back(b);
  return result;
}

}  // namespace omegacalc

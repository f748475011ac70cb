#include "omegacalc/asymptotics.hpp"

#include <map>
#include <numeric>
#include <string>

namespace omegacalc {

OmegaSeries omega_series(const NumericalMonoid& monoid, Int lo, Int hi, Int budget) {
  if (lo < 1) fail(errc::invalid_range, "series must start at 1 or later");
  if (lo > hi) fail(errc::invalid_range, "empty range");
  OmegaSeries series{monoid, lo, hi, {}};
  for (Int n = lo; n <= hi; ++n) {
    if (!monoid.contains(n)) continue;
    series.entries.emplace_back(n, omega(monoid, n, budget).omega);
  }
  return series;
}

QuasilinearModel fit_quasilinear(const OmegaSeries& series, Int stability_window) {
  if (stability_window < 1) fail(errc::invalid_argument, "stability window must be >= 1");
  const Int n1 = series.monoid.generators().front();
  const Int needed = (stability_window + 2) * n1;
  if (static_cast<Int>(series.entries.size()) < needed)
    fail(errc::series_too_short, "need at least " + std::to_string(needed) +
                                     " members to fit, series has " +
                                     std::to_string(series.entries.size()));

  std::map<Int, Int> omega_at(series.entries.begin(), series.entries.end());
  const std::size_t window_len = static_cast<std::size_t>(stability_window * n1);
  const auto window_begin = series.entries.end() - static_cast<std::ptrdiff_t>(window_len);

  // The window must be internally slope-consistent before we trust it.
  for (auto it = window_begin; it != series.entries.end(); ++it) {
    const Int n = it->first;
    if (n + n1 > series.hi) continue;
    const auto next = omega_at.find(n + n1);
    if (next == omega_at.end() || next->second != it->second + 1)
      fail(errc::window_unstable,
           "omega(n + n1) != omega(n) + 1 inside the stability window at n = " +
               std::to_string(n));
  }

  QuasilinearModel model;
  model.n1 = n1;
  model.certified_through = series.hi;
  std::vector<std::optional<Int>> intercepts(static_cast<std::size_t>(n1));
  for (auto it = window_begin; it != series.entries.end(); ++it) {
    const auto [n, w] = *it;
    const std::size_t r = static_cast<std::size_t>(n % n1);
    const Int c = w - n / n1;
    if (intercepts[r] && *intercepts[r] != c)
      fail(errc::window_unstable, "intercept for residue " + std::to_string(n % n1) +
                                      " is not constant across the stability window");
    intercepts[r] = c;
  }
  for (Int r = 0; r < n1; ++r) {
    if (!intercepts[static_cast<std::size_t>(r)])
      fail(errc::window_unstable,
           "residue class " + std::to_string(r) + " missing from the stability window");
    model.intercepts.push_back(*intercepts[static_cast<std::size_t>(r)]);
  }

  for (auto it = series.entries.rbegin(); it != series.entries.rend(); ++it) {
    if (it->second != model.value(it->first)) {
      model.dissonance = it->first;
      break;
    }
  }
  return model;
}

Int minimal_period(const QuasilinearModel& model) {
  const Int n1 = model.n1;
  // model(n) - n/n1 on residue class r is intercepts[r] - r/n1; compare the
  // scaled integer form n1*c[r] - r.
  std::vector<Int> scaled(static_cast<std::size_t>(n1));
  for (Int r = 0; r < n1; ++r)
    scaled[static_cast<std::size_t>(r)] = n1 * model.intercepts[static_cast<std::size_t>(r)] - r;
  for (Int p = 1; p <= n1; ++p) {
    if (n1 % p != 0) continue;
    bool periodic = true;
    for (Int r = 0; r < n1 && periodic; ++r)
      periodic = scaled[static_cast<std::size_t>(r)] ==
                 scaled[static_cast<std::size_t>((r + p) % n1)];
    if (periodic) return p;
  }
  return n1;
}

Rational make_rational(Int num, Int den) {
  if (den == 0) fail(errc::invalid_argument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Int g = std::gcd(num < 0 ? -num : num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

Rational asymptotic_ratio(const NumericalMonoid& monoid, Int N, Int budget) {
  if (!monoid.contains(N)) fail(errc::not_a_member, std::to_string(N) + " is not a member", N);
  if (N <= monoid.frobenius())
    fail(errc::invalid_argument, "N must exceed the Frobenius number");
  return make_rational(omega(monoid, N, budget).omega, N);
}

}  // namespace omegacalc

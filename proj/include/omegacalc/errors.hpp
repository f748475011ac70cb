#pragma once

#include <stdexcept>
#include <string>

namespace omegacalc {

enum class errc {
  invalid_argument,
  empty_generators,
  gcd_not_one,
  degenerate_monoid,
  not_a_member,
  zero_element,
  unit_element,
  dimension_mismatch,
  budget_exceeded,
  not_coprime,
  zero_factorization,
  below_threshold,
  invalid_range,
  window_unstable,
  series_too_short,
  element_out_of_range,
  not_zero_sum,
  not_idempotent,
  not_regular_unit,
  factorization_failed,
  step_in_gamma,
  box_too_small,
  cap_not_found,
};

const char* errc_name(errc code);

/// Library-wide exception. `detail` carries the offending value where one
/// exists (e.g. the gcd for errc::gcd_not_one).
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message, long long detail = 0);

  errc code() const { return code_; }
  long long detail() const { return detail_; }

 private:
  errc code_;
  long long detail_;
};

[[noreturn]] void fail(errc code, const std::string& message, long long detail = 0);

}  // namespace omegacalc

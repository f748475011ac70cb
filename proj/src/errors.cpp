#include "omegacalc/errors.hpp"

namespace omegacalc {

const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::empty_generators: return "EmptyGenerators";
    case errc::gcd_not_one: return "GcdNotOne";
    case errc::degenerate_monoid: return "DegenerateMonoid";
    case errc::not_a_member: return "NotAMember";
    case errc::zero_element: return "ZeroElement";
    case errc::unit_element: return "UnitElement";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::not_coprime: return "NotCoprime";
    case errc::zero_factorization: return "ZeroFactorization";
    case errc::below_threshold: return "BelowThreshold";
    case errc::invalid_range: return "InvalidRange";
    case errc::window_unstable: return "WindowUnstable";
    case errc::series_too_short: return "SeriesTooShort";
    case errc::element_out_of_range: return "ElementOutOfRange";
    case errc::not_zero_sum: return "NotZeroSum";
    case errc::not_idempotent: return "NotIdempotent";
    case errc::not_regular_unit: return "NotRegularUnit";
    case errc::factorization_failed: return "FactorizationFailed";
    case errc::step_in_gamma: return "StepInGamma";
    case errc::box_too_small: return "BoxTooSmall";
    case errc::cap_not_found: return "CapNotFound";
  }
  return "UnknownError";
}

Error::Error(errc code, const std::string& message, long long detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      detail_(detail) {}

void fail(errc code, const std::string& message, long long detail) {
  throw Error(code, message, detail);
}

}  // namespace omegacalc

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "supertower/model.hpp"
#include "supertower/strata.hpp"
#include "supertower/valuation.hpp"

namespace supertower {

enum class SplitStatus { Proven, Assumed, FailedUnknown };

std::string to_string(SplitStatus s);

struct RedcheckOptions {
  /// Largest k tried in the test p | x^(ell^k) - 1.
  int cyclotomic_bound = 8;
  /// The user asserts that f splits completely over the maximal pro-ell
  /// extension of Q(mu_ell^inf) unramified away from ell.
  bool assert_splits = false;
};

struct IntegralityResult {
  bool lambda_unit = false;
  Valuation lambda_valuation = Valuation(0);
  bool roots_integral = false;
  /// Branch places whose polynomial has a coefficient of negative valuation.
  std::vector<std::size_t> offending_places;

  bool ok() const { return lambda_unit && roots_integral; }
};

/// A pair of branch places (or one place, for its discriminant) whose root
/// differences are not all ell-units.
struct DifferenceOffense {
  std::size_t first = 0;
  std::size_t second = 0;  // == first for a discriminant
  long valuation = 0;      // v_ell of the resultant or discriminant
  std::string label;       // "3-0" for two rational roots, else polynomial names
  friend bool operator==(const DifferenceOffense&, const DifferenceOffense&) = default;
};

struct DifferencesResult {
  bool units = true;
  std::vector<DifferenceOffense> offending;
};

/// Total ramification somewhere: S[0] is nonempty.
bool check_total_ramification(const Stratification& strat);

/// lambda is an ell-unit and every branch place has ell-integral coefficients
/// (for a monic polynomial this is the same as all roots being ell-integral).
IntegralityResult check_integrality(const CurveModel& model);

/// v_ell(Res(p_i, p_j)) = 0 for distinct branch places and v_ell(disc p) = 0
/// for branch places of degree >= 2. Places whose exponent is divisible by
/// ell^n are not branch points and are skipped. Throws ValidationError if two
/// places share a root.
DifferencesResult check_differences(const CurveModel& model);

/// Proven when every place is linear or divides x^(ell^k) - 1 for some
/// k <= cyclotomic_bound; Assumed when the user asserts it; else FailedUnknown.
SplitStatus check_splits_over_ten(const CurveModel& model, const RedcheckOptions& options = {});

struct ConditionReport {
  bool total_ramification = false;
  IntegralityResult integrality;
  DifferencesResult differences;
  SplitStatus splits = SplitStatus::FailedUnknown;
  bool certified = false;
  /// One line per failed condition; empty iff certified.
  std::vector<std::string> reasons;
};

/// The model the arithmetic conditions are read from: the input itself when
/// it is already a polynomial model (every exponent positive), else its
/// normalization.
const CurveModel& certification_model(const CurveModel& input, const CurveModel& normalized);

/// Runs all four checks on `model` with total ramification read from `strat`
/// (the stratification of the normalized model).
ConditionReport certify(const CurveModel& model, const Stratification& strat, const RedcheckOptions& options = {});

}  // namespace supertower

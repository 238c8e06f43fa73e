#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "supertower/model.hpp"

namespace supertower {

/// One curve description as stored on disk:
///
///   {"ell": 3, "n": 1, "lambda": {"num": "1", "den": "1"},
///    "factors": [{"coeffs": ["0", "1"], "mult": 1}, ...],
///    "assertions": {"splits_over_ten": false}}
///
/// coeffs are rational strings in ascending degree. "assertions" is optional.
struct CurveFile {
  std::int64_t ell = 2;
  int n = 1;
  Rat lambda{1};
  std::vector<Factor> factors;
  bool assert_splits = false;
};

/// Structural parse. Malformed JSON, missing or mistyped fields, unknown
/// keys and unparseable numbers raise ParseError; out-of-range values
/// (ell not prime, n < 1, zero lambda or denominator, no factors, zero
/// multiplicity, constant factor) raise ValidationError.
CurveFile parse_curve_file(std::string_view text);

/// The validated model (ValidationError on failure).
CurveModel to_model(const CurveFile& file);

nlohmann::json to_json(const CurveFile& file);

/// A curve file describing `model` exactly: monic place polynomials with
/// their exponents and the model's lambda.
CurveFile curve_file_of(const CurveModel& model, bool assert_splits);

}  // namespace supertower

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "supertower/poly.hpp"
#include "supertower/rational.hpp"

namespace supertower {

/// Largest supported ell^n. The divisor machinery expands fibers of size up
/// to ell^(n-1) point by point.
inline constexpr std::int64_t kMaxCoverDegree = std::int64_t{1} << 12;

enum class IrreducibilityStatus { Certified, Assumed };

/// One Galois orbit of points of the affine line: a monic irreducible
/// polynomial and the common order of f at its roots.
struct Place {
  Poly poly;
  std::int64_t exponent = 0;
  IrreducibilityStatus status = IrreducibilityStatus::Certified;

  int degree() const { return poly.degree(); }
  friend bool operator==(const Place&, const Place&) = default;
};

/// A factor as written by the user: any nonconstant polynomial, any nonzero
/// multiplicity. Leading coefficients are folded into lambda.
struct Factor {
  Poly poly;
  std::int64_t multiplicity = 0;
};

/// The affine model y^(ell^n) = lambda * prod poly^exponent.
///
/// Places are kept in canonical order (see canonical_less) and are pairwise
/// coprime, monic and square-free. A model flagged normalized additionally
/// has 0 < exponent < ell^n for every place and an unbranched point at
/// infinity; the flag is only ever set after re-checking both.
class CurveModel {
 public:
  /// Validating constructor for user input. Certifies each factor's
  /// irreducibility; Reducible is rejected, Unknown becomes Assumed.
  /// Throws ValidationError.
  static CurveModel from_factors(std::int64_t ell, int n, const Rat& lambda,
                                 const std::vector<Factor>& factors);

  /// Trusts each place's irreducibility status, re-checks everything else.
  static CurveModel from_places(std::int64_t ell, int n, const Rat& lambda,
                                std::vector<Place> places);

  /// As from_places, and also verifies the normalized-model invariants.
  static CurveModel normalized(std::int64_t ell, int n, const Rat& lambda,
                               std::vector<Place> places);

  std::int64_t ell() const { return ell_; }
  int n() const { return n_; }
  /// ell^n, the degree of the cover.
  std::int64_t cover_degree() const { return cover_degree_; }
  const Rat& lambda() const { return lambda_; }
  const std::vector<Place>& places() const { return places_; }
  bool is_normalized() const { return normalized_; }

  /// e_infinity = deg f1 - deg f2 = sum of exponent * degree.
  std::int64_t infinity_exponent() const;
  bool infinity_branched() const { return infinity_exponent() % cover_degree_ != 0; }
  bool is_polynomial() const;

  /// lambda * prod poly^exponent, for polynomial models only.
  Poly expand() const;

  friend bool operator==(const CurveModel&, const CurveModel&) = default;

 private:
  CurveModel() = default;
  static CurveModel build(std::int64_t ell, int n, const Rat& lambda, std::vector<Place> places);

  std::int64_t ell_ = 2;
  int n_ = 1;
  std::int64_t cover_degree_ = 2;
  Rat lambda_{1};
  std::vector<Place> places_;
  bool normalized_ = false;
};

/// A branch point: a place, or infinity (place == nullopt), with its n-value
/// (the exponent of the place, or e_infinity).
struct BranchEntry {
  std::optional<std::size_t> place;
  std::int64_t n_value = 0;
  friend bool operator==(const BranchEntry&, const BranchEntry&) = default;
};

/// Places with exponent not divisible by ell^n, then infinity if it branches.
std::vector<BranchEntry> branch_set(const CurveModel& model);

/// A point of P^1(Q): a rational number or infinity.
struct ProjectivePoint {
  std::optional<Rat> value;  // nullopt = infinity

  bool is_infinity() const { return !value.has_value(); }
  std::string str() const { return value ? value->str() : "inf"; }
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// One factor of the y-substitution: y_old = y_new * prod poly(x_new)^power.
struct YRescale {
  Poly poly;
  std::int64_t power = 0;
  friend bool operator==(const YRescale&, const YRescale&) = default;
};

struct MobiusRecord {
  /// The unbranched point sent to infinity by x_new = 1/(x_old - pivot);
  /// infinity itself means the x-coordinate is unchanged.
  ProjectivePoint pivot;
  std::vector<YRescale> y_rescale;
  friend bool operator==(const MobiusRecord&, const MobiusRecord&) = default;
};

struct Normalization {
  CurveModel model;
  MobiusRecord record;
};

/// Infinity if it is unbranched, else the least integer c >= 0 that is not a
/// root of any place polynomial.
ProjectivePoint pivot_select(const CurveModel& model);

/// Bring the model to the form y^(ell^n) = lambda' * g(x) with g a monic
/// polynomial, infinity unbranched and all exponents in (0, ell^n).
///
/// With a finite pivot c, a place p of degree d becomes
///     p_new(X) = X^d * p(c + 1/X) / p(c)            (monic, same degree)
/// and the new constant is
///     lambda' = lambda * prod p(c)^e,
/// with the old point at infinity appearing as the new place X of exponent
/// -e_infinity. Every exponent e is then shifted by k * ell^n with
/// k = ceil(-e / ell^n) and y is rescaled by prod p^(-k); places whose
/// exponent becomes 0 are dropped.
///
/// Throws DomainError if f is constant.
Normalization normalize(const CurveModel& model);

}  // namespace supertower

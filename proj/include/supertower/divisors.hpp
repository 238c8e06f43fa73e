#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "supertower/model.hpp"
#include "supertower/smith.hpp"
#include "supertower/strata.hpp"

namespace supertower {

/// A point of P^1 named formally: one root of a place (by index), the point
/// at infinity, or a rational number that is not a root of any place.
struct BasePoint {
  enum class Kind { Root, Infinity, Rational };

  Kind kind = Kind::Root;
  std::size_t place = 0;
  int root = 0;
  Rat value;

  static BasePoint root_of(std::size_t place, int root) { return {Kind::Root, place, root, Rat(0)}; }
  static BasePoint infinity() { return {Kind::Infinity, 0, 0, Rat(0)}; }
  static BasePoint rational(const Rat& v) { return {Kind::Rational, 0, 0, v}; }

  std::string str() const;
  friend bool operator==(const BasePoint&, const BasePoint&) = default;
  friend std::strong_ordering operator<=>(const BasePoint&, const BasePoint&) = default;
};

/// One point of C_s over a base point; fibers are numbered 0..size-1.
struct PointLabel {
  BasePoint base;
  int level = 0;
  std::int64_t fiber = 0;

  friend bool operator==(const PointLabel&, const PointLabel&) = default;
  friend std::strong_ordering operator<=>(const PointLabel&, const PointLabel&) = default;
};

/// Finitely supported integer combination of points of C_s.
class SymbolicDivisor {
 public:
  explicit SymbolicDivisor(int level) : level_(level) {}

  int level() const { return level_; }
  const std::map<PointLabel, std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t coeff(const PointLabel& p) const;

  void add(const PointLabel& p, std::int64_t c);
  std::int64_t degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Nonzero with every coefficient equal to 1.
  bool is_reduced() const;
  bool disjoint_from(const SymbolicDivisor& o) const;

  SymbolicDivisor& operator+=(const SymbolicDivisor& o);
  SymbolicDivisor& operator-=(const SymbolicDivisor& o);
  SymbolicDivisor& operator*=(std::int64_t c);
  friend SymbolicDivisor operator+(SymbolicDivisor a, const SymbolicDivisor& b) { return a += b; }
  friend SymbolicDivisor operator-(SymbolicDivisor a, const SymbolicDivisor& b) { return a -= b; }
  friend SymbolicDivisor operator*(std::int64_t c, SymbolicDivisor a) { return a *= c; }
  friend bool operator==(const SymbolicDivisor&, const SymbolicDivisor&) = default;

 private:
  void check_level(const SymbolicDivisor& o) const;
  int level_;
  std::map<PointLabel, std::int64_t> coeffs_;
};

/// Dense matrix over F_ell with labelled rows and columns.
class FlMatrix {
 public:
  FlMatrix(std::int64_t ell, std::vector<std::string> row_labels, std::vector<std::string> col_labels);

  std::int64_t ell() const { return ell_; }
  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  std::int64_t at(std::size_t r, std::size_t c) const { return data_[r * cols() + c]; }
  /// Stores v reduced into [0, ell).
  void set(std::size_t r, std::size_t c, std::int64_t v);

  std::size_t rank() const;

 private:
  std::int64_t ell_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<std::int64_t> data_;
};

/// Presentation of W_s as (W_s^0 (x) F_ell) / <R_s mod ell>.
struct WsPresentation {
  int s = 1;
  /// Rows: the basis D_{s,xi}, xi in S[<s] minus the pivot; columns: the
  /// points of C_s they are supported on.
  FlMatrix basis;
  /// One row: coordinates of R_s mod ell in that basis.
  FlMatrix relation;
  /// Integer coordinates of R_s in the basis (the u_xi).
  std::vector<std::int64_t> relation_coords;
  std::int64_t dim = 0;
};

/// Symbolic divisors on the curves C_s of the tower of a normalized,
/// geometrically irreducible model.
///
/// The pivot xi_0 is root 0 of the first place of S[0] in canonical order
/// (smallest degree, then coefficients). The true Galois action on roots is
/// not modelled; everything here is a sum over whole fibers.
class DivisorLattice {
 public:
  /// Throws DomainError for a reducible model, ArgumentError if not normalized.
  explicit DivisorLattice(const CurveModel& model);

  const CurveModel& model() const { return model_; }
  const Stratification& strata() const { return strat_; }
  std::int64_t ell() const { return model_.ell(); }
  int n() const { return model_.n(); }
  BasePoint pivot() const { return BasePoint::root_of(pivot_place_, 0); }

  /// Stratum j of a branch point, n for unbranched points.
  int stratum(const BasePoint& xi) const;
  /// Number of points of C_s over xi: ell^min(j, s).
  std::int64_t fiber_size(const BasePoint& xi, int s) const;

  /// Every root of every place, in place order.
  std::vector<BasePoint> branch_points() const;
  /// Roots in S[<s] (or S[<=s] with include_level).
  std::vector<BasePoint> branch_points_below(int s, bool include_level = false) const;

  /// [xi]_s, the reduced divisor on the fiber over xi.
  SymbolicDivisor fiber(const BasePoint& xi, int s) const;

  /// pi_s^* from level s-1 to s. Fiber i over an unbranched-at-this-step
  /// point goes to fibers i*ell .. i*ell+ell-1; over a point of S[<s] it goes
  /// to fiber i with multiplicity ell.
  SymbolicDivisor pullback(const SymbolicDivisor& div) const;
  /// One coefficient per base point when the divisor is constant along
  /// every whole fiber it meets; nullopt otherwise.
  std::optional<std::map<BasePoint, std::int64_t>> compress(const SymbolicDivisor& div) const;

  /// Iterated pullback up to level s.
  SymbolicDivisor pullback_to(const SymbolicDivisor& div, int s) const;

  /// D_{s,xi} = [xi]_s - ell^j [xi_0]_s for xi in S[j], j <= s.
  SymbolicDivisor d_divisor(const BasePoint& xi, int s) const;

  /// u_xi = n_xi / ell^j for a root of a place in S[j].
  std::int64_t u_value(const BasePoint& xi) const;

  /// R_s = sum over xi in S[<s] of u_xi D_{s,xi}.
  SymbolicDivisor r_divisor(int s) const;

  /// Z-basis {D_{s,xi} : xi in S[<s] - xi_0} of W_s^0, or of V_s^0 when
  /// include_level is set (strata up to s, s != n).
  std::vector<std::pair<BasePoint, SymbolicDivisor>> lattice_basis(int s, bool include_level = false) const;

  /// Basis, relation and dimension of W_s. Checks dim = #S[<s] - 2.
  WsPresentation ws_presentation(int s) const;

 private:
  void check_point(const BasePoint& xi) const;
  void check_level(int s) const;

  CurveModel model_;
  Stratification strat_;
  std::size_t pivot_place_ = 0;
};

/// Integer matrix whose rows are the generators written on the union of
/// their supports (columns in label order).
IntMatrix inclusion_matrix(std::span<const SymbolicDivisor> generators);

}  // namespace supertower

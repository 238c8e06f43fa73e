#pragma once

#include <cstdint>
#include <vector>

#include "supertower/model.hpp"

namespace supertower {

/// Partition of the branch locus of a normalized model by the ell-adic
/// valuation j of the multiplicity (0 <= j < n). Strata hold indices into
/// model.places(); counts are numbers of geometric points (summed degrees).
struct Stratification {
  std::int64_t ell = 2;
  int n = 1;
  std::vector<std::vector<std::size_t>> strata;  // size n
  std::vector<std::int64_t> counts;              // r_j, size n
  std::vector<int> place_stratum;                // stratum of each place

  /// #S[<s], points in strata 0..s-1.
  std::int64_t count_below(int s) const;
  std::int64_t total() const { return count_below(n); }
};

Stratification stratify(const CurveModel& model);

enum class GeometricIrreducibility { Irreducible, Reducible };

/// Irreducible over the algebraic closure iff some multiplicity is prime to
/// ell, i.e. S[0] is nonempty.
GeometricIrreducibility check_irreducible(const CurveModel& model);

struct TowerRow {
  int s = 0;
  std::int64_t genus = 0;           // g_s
  std::int64_t quotient_dim = 0;    // h_s = dim A_s (0 at s = 0)
  std::int64_t w_dim = 0;           // m_s = #S[<s] - 2 (0 at s = 0)
  std::int64_t phi = 1;             // phi(ell^s)
  friend bool operator==(const TowerRow&, const TowerRow&) = default;
};

/// Rows s = 0..n of the genus table of C_n -> ... -> C_0 = P^1.
struct TowerTable {
  std::int64_t ell = 2;
  int n = 1;
  std::vector<TowerRow> rows;

  const TowerRow& at(int s) const { return rows.at(static_cast<std::size_t>(s)); }
  std::int64_t top_genus() const { return rows.back().genus; }
};

/// 2 g_s - 2 = -2 ell^s + sum_{j<s} r_j ell^j (ell^(s-j) - 1).
std::int64_t genus_riemann_hurwitz(const Stratification& strat, int s);

/// Fills the table from h_s = ell^(s-1) (ell-1) m_s / 2 and checks every g_s
/// against genus_riemann_hurwitz (std::logic_error on disagreement).
/// Throws DomainError if S[0] is empty.
TowerTable tower_table(const Stratification& strat);

}  // namespace supertower

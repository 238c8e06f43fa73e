#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "supertower/model.hpp"
#include "supertower/redcheck.hpp"
#include "supertower/strata.hpp"

namespace supertower {

/// Diagonal of the ell-torsion representation of A_s: phi(ell^s) square
/// blocks psi_s(0), psi_s(-1), ..., psi_s(1 - phi(ell^s)), each of size m_s.
/// A trivial A_s (m_s = 0) has no blocks.
struct BlockShape {
  int s = 1;
  std::int64_t psi_dim = 0;
  std::int64_t block_count = 0;
  std::vector<std::int64_t> twist_exponents;

  std::int64_t total_dim() const { return psi_dim * block_count; }
  friend bool operator==(const BlockShape&, const BlockShape&) = default;
};

BlockShape block_shape(const TowerTable& table, int s);

enum class ShapeVerdict { ContainedInTen, NotCertified };

struct RepShapeReport {
  std::vector<BlockShape> levels;  // A_1 .. A_n
  std::int64_t total_dim = 0;      // 2 g_n
  ShapeVerdict verdict = ShapeVerdict::NotCertified;
  std::vector<std::string> reasons;
};

/// Nested shape of the whole tower. The torsion field is contained in the
/// maximal pro-ell extension exactly when the certification passed, or
/// vacuously when the top genus is 0.
RepShapeReport assemble(const TowerTable& table, const ConditionReport& certification);

/// One case of the classification of d_s = [k(S[<s]) : k(W_s)].
struct ExceptionalCase {
  char label = 'a';
  int d = 1;
  std::int64_t ell = 2;
  int s = 1;
  std::int64_t r0 = 0;
  bool below_is_s0 = false;  // S[<s] = S[0]
  friend bool operator==(const ExceptionalCase&, const ExceptionalCase&) = default;
};

/// Some place of S[0] has degree 1.
bool has_rational_point_in_s0(const CurveModel& normalized, const Stratification& strat);

/// Every case (a)-(f) consistent with ell, s, r_0 and whether S[<s] = S[0].
/// A rational point in S[0] leaves only (a).
std::vector<ExceptionalCase> classify_exceptional(const Stratification& strat, int s, bool rational_point_in_s0);

}  // namespace supertower

#include "supertower/repshape.hpp"

#include <stdexcept>

#include "supertower/errors.hpp"

namespace supertower {

BlockShape block_shape(const TowerTable& table, int s) {
  if (s < 1 || s > table.n) throw ArgumentError("block shape level outside 1..n");
  const TowerRow& row = table.at(s);
  BlockShape b;
  b.s = s;
  b.psi_dim = row.w_dim;
  if (row.w_dim == 0) return b;
  b.block_count = row.phi;
  for (std::int64_t i = 0; i < row.phi; ++i) b.twist_exponents.push_back(-i);
  return b;
}

RepShapeReport assemble(const TowerTable& table, const ConditionReport& certification) {
  RepShapeReport r;
  for (int s = 1; s <= table.n; ++s) {
    r.levels.push_back(block_shape(table, s));
    r.total_dim += r.levels.back().total_dim();
  }
  if (r.total_dim != 2 * table.top_genus()) throw std::logic_error("block dimensions do not add up to 2g");
  if (table.top_genus() == 0 || certification.certified) {
    r.verdict = ShapeVerdict::ContainedInTen;
  } else {
    r.verdict = ShapeVerdict::NotCertified;
    r.reasons = certification.reasons;
  }
  return r;
}

bool has_rational_point_in_s0(const CurveModel& normalized, const Stratification& strat) {
  if (strat.strata.empty()) return false;
  for (std::size_t i : strat.strata[0]) {
    if (normalized.places()[i].degree() == 1) return true;
  }
  return false;
}

std::vector<ExceptionalCase> classify_exceptional(const Stratification& strat, int s, bool rational_point_in_s0) {
  if (s < 1 || s > strat.n) throw ArgumentError("level outside 1..n");
  if (strat.counts.empty() || strat.counts[0] == 0) throw DomainError("classification needs S[0] nonempty");
  const std::int64_t ell = strat.ell;
  const std::int64_t r0 = strat.counts[0];
  const bool below_is_s0 = strat.count_below(s) == r0;
  auto make = [&](char label, int d) { return ExceptionalCase{label, d, ell, s, r0, below_is_s0}; };

  std::vector<ExceptionalCase> out{make('a', 1)};
  if (rational_point_in_s0) return out;
  if (ell == 3 && below_is_s0 && r0 == 3 && s == 1) out.push_back(make('b', 3));
  if (ell == 2 && below_is_s0 && r0 == 4 && s <= 2) out.push_back(make('c', 4));
  if (ell == 2 && below_is_s0 && r0 == 4) out.push_back(make('d', 2));
  if (ell == 2 && below_is_s0 && r0 == 2 && s == 1) out.push_back(make('e', 2));
  if (ell == 2 && !below_is_s0 && r0 == 2) out.push_back(make('f', 2));
  return out;
}

}  // namespace supertower

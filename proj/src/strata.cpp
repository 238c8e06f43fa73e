#include "supertower/strata.hpp"

#include <numeric>
#include <stdexcept>

#include "supertower/errors.hpp"
#include "supertower/valuation.hpp"

namespace supertower {

std::int64_t Stratification::count_below(int s) const {
  std::int64_t total = 0;
  for (int j = 0; j < s && j < n; ++j) total += counts[static_cast<std::size_t>(j)];
  return total;
}

Stratification stratify(const CurveModel& model) {
  if (!model.is_normalized()) throw ArgumentError("stratify expects a normalized model");
  Stratification st;
  st.ell = model.ell();
  st.n = model.n();
  st.strata.assign(static_cast<std::size_t>(model.n()), {});
  st.counts.assign(static_cast<std::size_t>(model.n()), 0);
  for (std::size_t i = 0; i < model.places().size(); ++i) {
    const auto& pl = model.places()[i];
    const long j = val_ell(mpz_class(static_cast<long>(pl.exponent)), model.ell());
    st.strata[static_cast<std::size_t>(j)].push_back(i);
    st.counts[static_cast<std::size_t>(j)] += pl.degree();
    st.place_stratum.push_back(static_cast<int>(j));
  }
  return st;
}

GeometricIrreducibility check_irreducible(const CurveModel& model) {
  if (!model.is_normalized()) throw ArgumentError("check_irreducible expects a normalized model");
  std::int64_t g = model.cover_degree();
  for (const auto& pl : model.places()) g = std::gcd(g, pl.exponent);
  return g == 1 ? GeometricIrreducibility::Irreducible : GeometricIrreducibility::Reducible;
}

std::int64_t genus_riemann_hurwitz(const Stratification& strat, int s) {
  std::int64_t twice = 2 - 2 * ipow(strat.ell, s);
  for (int j = 0; j < s; ++j) {
    twice += strat.counts[static_cast<std::size_t>(j)] * ipow(strat.ell, j) * (ipow(strat.ell, s - j) - 1);
  }
  if (twice % 2 != 0) throw std::logic_error("Riemann-Hurwitz gives an odd 2g");
  return twice / 2;
}

TowerTable tower_table(const Stratification& strat) {
  if (strat.counts.empty() || strat.counts[0] == 0) {
    throw DomainError("tower table needs a geometrically irreducible model (S[0] empty)");
  }
  TowerTable table;
  table.ell = strat.ell;
  table.n = strat.n;
  table.rows.push_back({0, 0, 0, 0, 1});
  std::int64_t genus = 0;
  for (int s = 1; s <= strat.n; ++s) {
    TowerRow row;
    row.s = s;
    row.phi = phi_prime_power(strat.ell, s);
    row.w_dim = strat.count_below(s) - 2;
    const std::int64_t twice_h = row.phi * row.w_dim;
    if (twice_h % 2 != 0) throw std::logic_error("odd dimension for A_s");
    row.quotient_dim = twice_h / 2;
    genus += row.quotient_dim;
    row.genus = genus;
    if (genus != genus_riemann_hurwitz(strat, s)) {
      throw std::logic_error("genus mismatch at level " + std::to_string(s));
    }
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace supertower

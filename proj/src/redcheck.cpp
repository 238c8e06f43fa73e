#include "supertower/redcheck.hpp"

#include "supertower/errors.hpp"
#include "supertower/resultant.hpp"

namespace supertower {

namespace {

bool is_branch_place(const CurveModel& model, const Place& pl) { return pl.exponent % model.cover_degree() != 0; }

std::string root_label(const Poly& linear) {
  const Rat root = -linear.coeff(0);
  return root.sign() < 0 ? "(" + root.str() + ")" : root.str();
}

std::string pair_label(const Poly& p, const Poly& q) {
  if (p.degree() == 1 && q.degree() == 1) return root_label(p) + "-" + root_label(q);
  return "roots of " + p.str() + " and " + q.str();
}

long valuation_of(const Rat& v, std::int64_t ell) { return val_ell(v, ell).value(); }

}  // namespace

std::string to_string(SplitStatus s) {
  switch (s) {
    case SplitStatus::Proven:
      return "Proven";
    case SplitStatus::Assumed:
      return "Assumed";
    case SplitStatus::FailedUnknown:
      return "FailedUnknown";
  }
  return "?";
}

bool check_total_ramification(const Stratification& strat) { return !strat.counts.empty() && strat.counts[0] > 0; }

IntegralityResult check_integrality(const CurveModel& model) {
  IntegralityResult r;
  r.lambda_valuation = val_ell(model.lambda(), model.ell());
  r.lambda_unit = r.lambda_valuation.is_unit();
  for (std::size_t i = 0; i < model.places().size(); ++i) {
    const auto& pl = model.places()[i];
    if (!is_branch_place(model, pl)) continue;
    for (const auto& c : pl.poly.coeffs()) {
      if (!val_ell(c, model.ell()).is_integral()) {
        r.offending_places.push_back(i);
        break;
      }
    }
  }
  r.roots_integral = r.offending_places.empty();
  return r;
}

DifferencesResult check_differences(const CurveModel& model) {
  DifferencesResult out;
  const auto& places = model.places();
  const std::int64_t ell = model.ell();
  for (std::size_t i = 0; i < places.size(); ++i) {
    if (!is_branch_place(model, places[i])) continue;
    if (places[i].degree() >= 2) {
      const Rat d = discriminant(places[i].poly);
      if (d.is_zero()) throw ValidationError("place " + places[i].poly.str() + " has a repeated root");
      const long v = valuation_of(d, ell);
      if (v != 0) out.offending.push_back({i, i, v, "roots of " + places[i].poly.str()});
    }
    for (std::size_t j = i + 1; j < places.size(); ++j) {
      if (!is_branch_place(model, places[j])) continue;
      const Rat r = resultant(places[i].poly, places[j].poly);
      if (r.is_zero()) {
        throw ValidationError("places " + places[i].poly.str() + " and " + places[j].poly.str() + " share a root");
      }
      const long v = valuation_of(r, ell);
      if (v != 0) out.offending.push_back({i, j, v, pair_label(places[i].poly, places[j].poly)});
    }
  }
  out.units = out.offending.empty();
  return out;
}

SplitStatus check_splits_over_ten(const CurveModel& model, const RedcheckOptions& options) {
  bool proven = true;
  for (const auto& pl : model.places()) {
    if (pl.degree() == 1) continue;
    // Roots of x^(ell^k) - 1 are ell-power roots of unity.
    bool divides = false;
    Poly power = divmod(Poly::x(), pl.poly).second;
    for (int k = 1; k <= options.cyclotomic_bound && !divides; ++k) {
      power = powmod(power, model.ell(), pl.poly);
      divides = power == Poly::constant(Rat(1));
    }
    if (!divides) {
      proven = false;
      break;
    }
  }
  if (proven) return SplitStatus::Proven;
  return options.assert_splits ? SplitStatus::Assumed : SplitStatus::FailedUnknown;
}

const CurveModel& certification_model(const CurveModel& input, const CurveModel& normalized) {
  return input.is_polynomial() ? input : normalized;
}

ConditionReport certify(const CurveModel& model, const Stratification& strat, const RedcheckOptions& options) {
  ConditionReport r;
  const std::string ell = std::to_string(model.ell());
  r.total_ramification = check_total_ramification(strat);
  if (!r.total_ramification) r.reasons.push_back("no totally ramified point");

  r.integrality = check_integrality(model);
  if (!r.integrality.lambda_unit) r.reasons.push_back("lambda " + model.lambda().str() + " is not a " + ell + "-unit");
  for (std::size_t i : r.integrality.offending_places) {
    r.reasons.push_back("roots of " + model.places()[i].poly.str() + " are not " + ell + "-integral");
  }

  r.differences = check_differences(model);
  for (const auto& o : r.differences.offending) {
    const bool rational = o.first != o.second && model.places()[o.first].degree() == 1 &&
                          model.places()[o.second].degree() == 1;
    r.reasons.push_back(rational ? "difference " + o.label + " is not a " + ell + "-unit"
                                 : o.label + " differ by a non-" + ell + "-unit");
  }

  r.splits = check_splits_over_ten(model, options);
  if (r.splits == SplitStatus::FailedUnknown) {
    r.reasons.push_back("splitting of f over the maximal pro-" + ell +
                        " extension of Q(mu_" + ell + "^inf) unramified away from " + ell + " is not established");
  }
  r.certified = r.reasons.empty();
  return r;
}

}  // namespace supertower

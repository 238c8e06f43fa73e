#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "supertower/errors.hpp"
#include "supertower/model.hpp"
#include "supertower/strata.hpp"
#include "supertower/valuation.hpp"

using namespace supertower;

namespace {

Place place(const Poly& p, std::int64_t e) { return {p, e, IrreducibilityStatus::Certified}; }

CurveModel make(std::int64_t ell, int n, const Rat& lambda, std::vector<Place> places) {
  return CurveModel::from_places(ell, n, lambda, std::move(places));
}

}  // namespace

TEST_CASE("branch set examples") {
  const auto cusp = make(2, 1, Rat(1), {place(Poly::linear(Rat(2)), 3)});
  const auto bs = branch_set(cusp);
  REQUIRE(bs.size() == 2);
  CHECK(bs[0] == BranchEntry{0, 3});
  CHECK_FALSE(bs[1].place.has_value());
  CHECK(bs[1].n_value == 3);

  const auto picardish = make(3, 1, Rat(1),
                              {place(Poly::linear(Rat(0)), 1), place(Poly::linear(Rat(1)), 1),
                               place(Poly::linear(Rat(2)), 1)});
  CHECK(branch_set(picardish).size() == 3);

  const auto square = make(2, 1, Rat(1), {place(Poly::linear(Rat(1)), 2)});
  CHECK(branch_set(square).empty());
}

TEST_CASE("pivot selection") {
  CHECK(pivot_select(make(2, 1, Rat(1), {place(Poly::linear(Rat(0)), 1), place(Poly::linear(Rat(1)), 1)}))
            .is_infinity());
  CHECK(pivot_select(make(2, 1, Rat(1), {place(Poly::linear(Rat(2)), 3)})).value == Rat(0));
  CHECK(pivot_select(make(2, 1, Rat(1), {place(Poly::linear(Rat(0)), 3), place(Poly::linear(Rat(1)), 1)}))
            .is_infinity());
  // 0 and 1 are roots, so the pivot is 2.
  CHECK(pivot_select(make(2, 1, Rat(1), {place(Poly::linear(Rat(0)), 1), place(Poly::linear(Rat(1)), 2)}))
            .value == Rat(2));
}

TEST_CASE("normalize the cusp (x-2)^3 with ell = 2") {
  const auto cusp = make(2, 1, Rat(1), {place(Poly::linear(Rat(2)), 3)});
  const auto out = normalize(cusp);
  CHECK(out.record.pivot.value == Rat(0));
  CHECK(out.model.is_normalized());
  CHECK(out.model.lambda() == Rat(-8));
  REQUIRE(out.model.places().size() == 2);
  // Canonical order compares constant terms first: x - 1/2 precedes x.
  CHECK(out.model.places()[0].poly == Poly::linear(Rat::parse("1/2")));
  CHECK(out.model.places()[0].exponent == 1);
  CHECK(out.model.places()[1].poly == Poly::linear(Rat(0)));
  CHECK(out.model.places()[1].exponent == 1);
  CHECK(oracle::same_function_field(cusp, out));
}

TEST_CASE("normalize leaves a normalized model alone") {
  const auto m = make(2, 1, Rat(1), {place(Poly::linear(Rat(0)), 1), place(Poly::linear(Rat(1)), 1)});
  const auto out = normalize(m);
  CHECK(out.record.pivot.is_infinity());
  CHECK(out.record.y_rescale.empty());
  CHECK(out.model.places() == m.places());
  CHECK(out.model.lambda() == m.lambda());
}

TEST_CASE("normalize reduces exponents without moving points") {
  const auto m = make(3, 1, Rat(1), {place(Poly::linear(Rat(1)), 4), place(Poly::linear(Rat(-1)), 2)});
  const auto out = normalize(m);
  CHECK(out.record.pivot.is_infinity());
  REQUIRE(out.model.places().size() == 2);
  CHECK(out.model.places()[0].poly == Poly::linear(Rat(1)));
  CHECK(out.model.places()[0].exponent == 1);
  CHECK(out.model.places()[1].poly == Poly::linear(Rat(-1)));
  CHECK(out.model.places()[1].exponent == 2);
  REQUIRE(out.record.y_rescale.size() == 1);
  CHECK(out.record.y_rescale[0].poly == Poly::linear(Rat(1)));
  CHECK(out.record.y_rescale[0].power == 1);
  CHECK(oracle::same_function_field(m, out));
}

TEST_CASE("normalize drops places whose exponent vanishes") {
  const auto m = make(2, 1, Rat(1), {place(Poly::linear(Rat(1)), 2), place(Poly::linear(Rat(2)), 2)});
  const auto out = normalize(m);
  CHECK(out.model.places().empty());
  CHECK(check_irreducible(out.model) == GeometricIrreducibility::Reducible);
  CHECK(oracle::same_function_field(m, out));
}

TEST_CASE("normalize rejects constant f") {
  CHECK_THROWS_AS(normalize(make(2, 1, Rat(3), {})), DomainError);
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(make(4, 1, Rat(1), {place(Poly::linear(Rat(0)), 1)}), ValidationError);
  CHECK_THROWS_AS(make(2, 0, Rat(1), {place(Poly::linear(Rat(0)), 1)}), ValidationError);
  CHECK_THROWS_AS(make(2, 1, Rat(0), {place(Poly::linear(Rat(0)), 1)}), ValidationError);
  CHECK_THROWS_AS(make(2, 13, Rat(1), {place(Poly::linear(Rat(0)), 1)}), ValidationError);
  CHECK_THROWS_AS(make(2, 1, Rat(1), {place(Poly::linear(Rat(0)), 0)}), ValidationError);
  CHECK_THROWS_AS(make(2, 1, Rat(1), {place(Poly::linear(Rat(0)), 1), place(Poly::linear(Rat(0)), 2)}),
                  ValidationError);
  CHECK_THROWS_AS(make(2, 1, Rat(1), {place(Poly({Rat(0), Rat(2)}), 1)}), ValidationError);
  // Normalized constructor re-checks its invariants.
  CHECK_THROWS_AS(CurveModel::normalized(2, 1, Rat(1), {place(Poly::linear(Rat(0)), 1)}), ValidationError);
  CHECK_THROWS_AS(CurveModel::normalized(2, 1, Rat(1),
                                         {place(Poly::linear(Rat(0)), 3), place(Poly::linear(Rat(1)), 1)}),
                  ValidationError);
}

TEST_CASE("from_factors folds leading coefficients and certifies factors") {
  const auto m = CurveModel::from_factors(3, 1, Rat(1),
                                          {{Poly({Rat(-6), Rat(3)}), 1}, {Poly::x(), 1}, {Poly::linear(Rat(1)), 1}});
  CHECK(m.lambda() == Rat(3));
  CHECK(m.places()[0].poly == Poly::linear(Rat(2)));
  CHECK(m.places()[2].poly == Poly::x());
  CHECK_THROWS_AS(CurveModel::from_factors(2, 1, Rat(1), {{Poly({Rat(-1), Rat(0), Rat(1)}), 1}}),
                  ValidationError);
  const auto quartic = CurveModel::from_factors(2, 1, Rat(1), {{Poly({Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)}), 1}});
  CHECK(quartic.places()[0].status == IrreducibilityStatus::Assumed);
  const auto quad = CurveModel::from_factors(2, 1, Rat(1), {{Poly({Rat(1), Rat(0), Rat(1)}), 1}});
  CHECK(quad.places()[0].status == IrreducibilityStatus::Certified);
}

TEST_CASE("normalize properties on random models") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (std::int64_t ell : {2, 3, 5}) {
    for (int n = 1; n <= 3; ++n) {
      if (ell == 5 && n == 3) continue;
      for (int i = 0; i < 25; ++i) {
        gen::ModelShape shape{ell, n, 4, 2, 3 * ipow(ell, n)};
        const CurveModel m = gen::random_model(rng, shape);
        const Normalization out = normalize(m);
        const CurveModel& h = out.model;
        CHECK(h.is_normalized());
        CHECK(h.infinity_exponent() % h.cover_degree() == 0);
        for (const auto& pl : h.places()) {
          CHECK(pl.exponent > 0);
          CHECK(pl.exponent < h.cover_degree());
        }
        CHECK(oracle::same_function_field(m, out));
        CHECK(oracle::stratum_labels(m) == oracle::stratum_labels(h));
        if (!h.places().empty()) {
          const Normalization again = normalize(h);
          CHECK(again.model == h);
          CHECK(again.record.pivot.is_infinity());
          CHECK(again.record.y_rescale.empty());
        }
        ++checked;
      }
    }
  }
  CHECK(checked == 200);
}

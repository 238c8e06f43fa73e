#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "supertower/errors.hpp"
#include "supertower/repshape.hpp"
#include "supertower/valuation.hpp"

using namespace supertower;

namespace {

Place place(const Poly& p, std::int64_t e) { return {p, e, IrreducibilityStatus::Certified}; }

CurveModel normalized_of(std::int64_t ell, int n, std::vector<Place> places) {
  return normalize(CurveModel::from_places(ell, n, Rat(1), std::move(places))).model;
}

/// A stratification with the given point counts, for the classifier.
Stratification counts_only(std::int64_t ell, std::vector<std::int64_t> counts) {
  Stratification st;
  st.ell = ell;
  st.n = static_cast<int>(counts.size());
  st.counts = std::move(counts);
  st.strata.assign(st.counts.size(), {});
  return st;
}

std::string labels(const std::vector<ExceptionalCase>& cases) {
  std::string s;
  for (const auto& c : cases) s += c.label;
  return s;
}

}  // namespace

TEST_CASE("block shapes") {
  const auto picard = normalized_of(3, 1, {place(Poly::x(), 1), place(Poly::linear(Rat(1)), 1),
                                           place(Poly::linear(Rat(-1)), 1), place(Poly::linear(Rat(2)), 1),
                                           place(Poly::linear(Rat(3)), 2)});
  const auto t = tower_table(stratify(picard));
  const auto b = block_shape(t, 1);
  CHECK(b.block_count == 2);
  CHECK(b.psi_dim == 3);
  CHECK(b.twist_exponents == std::vector<std::int64_t>{0, -1});
  CHECK(b.total_dim() == 2 * t.top_genus());

  const auto two = tower_table(stratify(normalized_of(
      2, 2, {place(Poly::linear(Rat(1)), 1), place(Poly::linear(Rat(-3)), 1), place(Poly::linear(Rat(2)), 2)})));
  CHECK(block_shape(two, 1).block_count == 0);
  CHECK(block_shape(two, 1).twist_exponents.empty());
  const auto b2 = block_shape(two, 2);
  CHECK(b2.block_count == 2);
  CHECK(b2.psi_dim == 1);
  CHECK(b2.total_dim() == 2);
  CHECK_THROWS_AS(block_shape(two, 3), ArgumentError);
}

TEST_CASE("assemble") {
  const auto m = normalized_of(3, 1, {place(Poly::x(), 1), place(Poly::linear(Rat(1)), 1), place(Poly::linear(Rat(2)), 1)});
  const auto t = tower_table(stratify(m));
  ConditionReport pass;
  pass.certified = true;
  const auto ok = assemble(t, pass);
  CHECK(ok.verdict == ShapeVerdict::ContainedInTen);
  CHECK(ok.total_dim == 2);
  REQUIRE(ok.levels.size() == 1);
  CHECK(ok.levels[0].psi_dim == 1);

  ConditionReport fail;
  fail.reasons = {"difference 3-0 is not a 3-unit"};
  const auto bad = assemble(t, fail);
  CHECK(bad.verdict == ShapeVerdict::NotCertified);
  CHECK(bad.reasons == fail.reasons);

  const auto conic = tower_table(stratify(normalized_of(2, 1, {place(Poly::x(), 1), place(Poly::linear(Rat(1)), 1)})));
  const auto vac = assemble(conic, fail);
  CHECK(vac.verdict == ShapeVerdict::ContainedInTen);
  CHECK(vac.total_dim == 0);
}

TEST_CASE("exceptional case examples") {
  CHECK(labels(classify_exceptional(counts_only(3, {3}), 1, false)) == "ab");
  CHECK(labels(classify_exceptional(counts_only(3, {5}), 1, false)) == "a");
  CHECK(labels(classify_exceptional(counts_only(2, {4}), 1, false)) == "acd");
  CHECK(labels(classify_exceptional(counts_only(2, {4}), 1, true)) == "a");
  CHECK(labels(classify_exceptional(counts_only(2, {4, 0, 0}), 3, false)) == "ad");
  CHECK(labels(classify_exceptional(counts_only(2, {2}), 1, false)) == "ae");
  CHECK(labels(classify_exceptional(counts_only(2, {2, 1}), 2, false)) == "af");
  CHECK(labels(classify_exceptional(counts_only(2, {2, 1}), 1, false)) == "ae");
  CHECK(labels(classify_exceptional(counts_only(3, {3, 2}), 2, false)) == "a");
}

TEST_CASE("classification and shape properties on random models") {
  std::mt19937_64 rng(6);
  for (std::int64_t ell : {2, 3, 5}) {
    for (int n = 1; n <= 3; ++n) {
      for (int i = 0; i < 30; ++i) {
        const CurveModel m = gen::random_irreducible_normalized(rng, ell, n, 2, 5);
        const auto st = stratify(m);
        const auto t = tower_table(st);
        ConditionReport pass;
        pass.certified = true;
        const auto rep = assemble(t, pass);
        CHECK(rep.total_dim == 2 * t.top_genus());
        for (const auto& b : rep.levels) {
          for (std::size_t k = 0; k < b.twist_exponents.size(); ++k) {
            CHECK(b.twist_exponents[k] == -static_cast<std::int64_t>(k));
          }
          if (b.psi_dim > 0) CHECK(b.block_count == phi_prime_power(ell, b.s));
        }
        const bool rational = has_rational_point_in_s0(m, st);
        for (int s = 1; s <= n; ++s) {
          const auto cases = classify_exceptional(st, s, rational);
          REQUIRE_FALSE(cases.empty());
          CHECK(cases[0].label == 'a');
          for (const auto& c : cases) {
            CHECK(st.counts[0] % c.d == 0);
            CHECK(c.d <= 4);
          }
          const std::int64_t r0 = st.counts[0];
          if (r0 < 2 || r0 > 4 || rational) CHECK(cases.size() == 1);
        }
      }
    }
  }
}

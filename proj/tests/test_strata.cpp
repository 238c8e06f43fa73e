#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "supertower/errors.hpp"
#include "supertower/strata.hpp"
#include "supertower/valuation.hpp"

using namespace supertower;

namespace {

Place place(const Poly& p, std::int64_t e) { return {p, e, IrreducibilityStatus::Certified}; }

CurveModel normalized_of(std::int64_t ell, int n, std::vector<Place> places) {
  return normalize(CurveModel::from_places(ell, n, Rat(1), std::move(places))).model;
}

CurveModel two_two_example() {
  return normalized_of(2, 2, {place(Poly::linear(Rat(1)), 1), place(Poly::linear(Rat(-3)), 1),
                              place(Poly::linear(Rat(2)), 2)});
}

CurveModel picard_example() {
  return normalized_of(3, 1, {place(Poly::x(), 1), place(Poly::linear(Rat(1)), 1),
                              place(Poly::linear(Rat(-1)), 1), place(Poly::linear(Rat(2)), 1),
                              place(Poly::linear(Rat(3)), 2)});
}

}  // namespace

TEST_CASE("stratify examples") {
  const auto m = two_two_example();
  const auto st = stratify(m);
  CHECK(st.counts == std::vector<std::int64_t>{2, 1});
  REQUIRE(st.strata[1].size() == 1);
  CHECK(m.places()[st.strata[1][0]].poly == Poly::linear(Rat(2)));

  const auto p = stratify(picard_example());
  CHECK(p.counts == std::vector<std::int64_t>{5});

  const auto q = stratify(normalized_of(2, 1, {place(Poly::x(), 1), place(Poly({Rat(1), Rat(0), Rat(1)}), 1)}));
  // Degree 3, so infinity joins the branch locus after normalizing.
  CHECK(q.counts == std::vector<std::int64_t>{4});

  CHECK_THROWS_AS(stratify(CurveModel::from_places(2, 1, Rat(1), {place(Poly::x(), 3)})), ArgumentError);
}

TEST_CASE("geometric irreducibility") {
  CHECK(check_irreducible(normalized_of(2, 1, {place(Poly::linear(Rat(1)), 2), place(Poly::linear(Rat(2)), 2)})) ==
        GeometricIrreducibility::Reducible);
  const auto sq = CurveModel::normalized(2, 2, Rat(1), {place(Poly::linear(Rat(1)), 2), place(Poly::linear(Rat(2)), 2)});
  CHECK(check_irreducible(sq) == GeometricIrreducibility::Reducible);
  CHECK(stratify(sq).counts == std::vector<std::int64_t>{0, 2});
  CHECK_THROWS_AS(tower_table(stratify(sq)), DomainError);
  CHECK(check_irreducible(normalized_of(3, 1, {place(Poly::x(), 1), place(Poly::linear(Rat(1)), 1),
                                               place(Poly::linear(Rat(2)), 1)})) ==
        GeometricIrreducibility::Irreducible);
}

TEST_CASE("tower table examples") {
  const auto picard = tower_table(stratify(picard_example()));
  CHECK(picard.at(1) == TowerRow{1, 3, 3, 3, 2});
  CHECK(picard.top_genus() == 3);

  const auto t = tower_table(stratify(two_two_example()));
  CHECK(t.at(0).genus == 0);
  CHECK(t.at(1) == TowerRow{1, 0, 0, 0, 1});
  CHECK(t.at(2) == TowerRow{2, 1, 1, 1, 2});

  const auto conic = tower_table(stratify(normalized_of(2, 1, {place(Poly::x(), 1), place(Poly::linear(Rat(1)), 1)})));
  CHECK(conic.top_genus() == 0);
}

TEST_CASE("tower table properties on random irreducible models") {
  std::mt19937_64 rng(77);
  for (std::int64_t ell : {2, 3, 5, 7}) {
    for (int n = 1; n <= 3; ++n) {
      for (int i = 0; i < 20; ++i) {
        const CurveModel m = gen::random_irreducible_normalized(rng, ell, n);
        const Stratification st = stratify(m);
        REQUIRE(check_irreducible(m) == GeometricIrreducibility::Irreducible);
        CHECK(st.counts[0] >= 2);
        const TowerTable t = tower_table(st);
        std::int64_t twice = 0;
        for (int s = 1; s <= n; ++s) {
          twice += phi_prime_power(ell, s) * t.at(s).w_dim;
          CHECK(t.at(s).w_dim >= 0);
          if (s > 1) CHECK(t.at(s).w_dim >= t.at(s - 1).w_dim);
        }
        CHECK(twice == 2 * t.top_genus());

        // Dropping the places of stratum >= s leaves g_t unchanged for t <= s.
        for (int s = 1; s < n; ++s) {
          Stratification cut = st;
          for (int j = s; j < n; ++j) cut.counts[static_cast<std::size_t>(j)] = 0;
          for (int t2 = 1; t2 <= s; ++t2) CHECK(genus_riemann_hurwitz(cut, t2) == t.at(t2).genus);
        }
      }
    }
  }
}

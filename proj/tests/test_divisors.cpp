#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "supertower/divisors.hpp"
#include "supertower/errors.hpp"
#include "supertower/valuation.hpp"

using namespace supertower;

namespace {

Place place(const Poly& p, std::int64_t e) { return {p, e, IrreducibilityStatus::Certified}; }

CurveModel normalized_of(std::int64_t ell, int n, std::vector<Place> places) {
  return normalize(CurveModel::from_places(ell, n, Rat(1), std::move(places))).model;
}

// Places in canonical order: x - 2 (S[1]), x - 1 (S[0], pivot), x + 3 (S[0]).
CurveModel two_two_example() {
  return normalized_of(2, 2, {place(Poly::linear(Rat(1)), 1), place(Poly::linear(Rat(-3)), 1),
                              place(Poly::linear(Rat(2)), 2)});
}

CurveModel picard_example() {
  return normalized_of(3, 1, {place(Poly::x(), 1), place(Poly::linear(Rat(1)), 1),
                              place(Poly::linear(Rat(-1)), 1), place(Poly::linear(Rat(2)), 1),
                              place(Poly::linear(Rat(3)), 2)});
}

std::size_t index_of(const CurveModel& m, const Poly& p) {
  for (std::size_t i = 0; i < m.places().size(); ++i) {
    if (m.places()[i].poly == p) return i;
  }
  throw std::runtime_error("no such place");
}

IntMatrix to_int(const std::vector<std::vector<long>>& rows) {
  IntMatrix m;
  for (const auto& r : rows) {
    std::vector<mpz_class> row;
    for (long v : r) row.emplace_back(v);
    m.push_back(row);
  }
  return m;
}

/// Points of P^1 to exercise: every branch root, infinity, one rational point.
std::vector<BasePoint> sample_points(const DivisorLattice& lat) {
  auto pts = lat.branch_points();
  pts.push_back(BasePoint::infinity());
  Rat r(1000);
  pts.push_back(BasePoint::rational(r));
  return pts;
}

}  // namespace

TEST_CASE("fiber divisor degrees") {
  const DivisorLattice lat(two_two_example());
  const auto& m = lat.model();
  const BasePoint xi1 = BasePoint::root_of(index_of(m, Poly::linear(Rat(2))), 0);
  CHECK(lat.stratum(xi1) == 1);
  const auto f = lat.fiber(xi1, 2);
  CHECK(f.is_reduced());
  CHECK(f.degree() == 2);
  for (int s = 0; s <= 2; ++s) {
    CHECK(lat.fiber(lat.pivot(), s).degree() == 1);
    CHECK(lat.fiber(lat.pivot(), s).is_reduced());
  }
  CHECK(lat.pivot() == BasePoint::root_of(index_of(m, Poly::linear(Rat(1))), 0));

  const DivisorLattice pic(picard_example());
  CHECK(pic.fiber(BasePoint::rational(Rat(10)), 1).degree() == 3);
  CHECK_THROWS_AS(pic.fiber(BasePoint::rational(Rat(2)), 1), ArgumentError);
  CHECK_THROWS_AS(pic.fiber(BasePoint::root_of(9, 0), 1), ArgumentError);
  CHECK_THROWS_AS(pic.fiber(BasePoint::root_of(0, 1), 1), ArgumentError);
  CHECK_THROWS_AS(pic.fiber(pic.pivot(), 2), ArgumentError);
}

TEST_CASE("pullback formulas") {
  const DivisorLattice lat(two_two_example());
  const auto& m = lat.model();
  const BasePoint xi1 = BasePoint::root_of(index_of(m, Poly::linear(Rat(2))), 0);
  CHECK(lat.pullback_to(lat.fiber(xi1, 0), 2) == 2 * lat.fiber(xi1, 2));
  const BasePoint far = BasePoint::rational(Rat(7));
  CHECK(lat.pullback_to(lat.fiber(far, 0), 2) == lat.fiber(far, 2));
  CHECK(lat.pullback_to(lat.fiber(far, 0) - lat.fiber(lat.pivot(), 0), 2) ==
        lat.fiber(far, 2) - 4 * lat.fiber(lat.pivot(), 2));
  CHECK_THROWS_AS(lat.pullback(lat.fiber(far, 2)), ArgumentError);
  CHECK_THROWS_AS(lat.fiber(far, 1) + lat.fiber(far, 2), ArgumentError);
}

TEST_CASE("distinguished divisors") {
  const DivisorLattice lat(two_two_example());
  const auto& m = lat.model();
  const BasePoint a = BasePoint::root_of(index_of(m, Poly::linear(Rat(-3))), 0);
  const BasePoint b = BasePoint::root_of(index_of(m, Poly::linear(Rat(2))), 0);
  const BasePoint p = lat.pivot();
  CHECK(lat.d_divisor(p, 2).is_zero());
  CHECK(lat.d_divisor(a, 2).degree() == 0);
  CHECK(lat.d_divisor(b, 2).degree() == 0);
  CHECK_THROWS_AS(lat.d_divisor(b, 0), ArgumentError);
  CHECK_THROWS_AS(lat.d_divisor(BasePoint::infinity(), 1), ArgumentError);
  CHECK(2 * lat.d_divisor(a, 2) == lat.pullback(lat.d_divisor(a, 1)));

  const auto r = lat.r_divisor(2);
  const auto expected = lat.fiber(a, 2) + lat.fiber(b, 2) - 3 * lat.fiber(p, 2);
  CHECK(r == expected);
  CHECK(r.degree() == 0);
  const auto compressed = lat.compress(r);
  REQUIRE(compressed.has_value());
  CHECK(compressed->at(a) == 1);
  CHECK(compressed->at(b) == 1);
  CHECK(compressed->at(p) == -3);

  // Two-term case at s = 1: only S[0] = {pivot, a}.
  CHECK(lat.r_divisor(1) == lat.fiber(a, 1) - lat.fiber(p, 1));
}

TEST_CASE("W_s presentation examples") {
  const DivisorLattice lat(two_two_example());
  const auto w2 = lat.ws_presentation(2);
  CHECK(w2.basis.rows() == 2);
  CHECK(w2.relation.rank() == 1);
  CHECK(w2.dim == 1);
  const auto w1 = lat.ws_presentation(1);
  CHECK(w1.dim == 0);

  const DivisorLattice pic(picard_example());
  const auto wp = pic.ws_presentation(1);
  CHECK(wp.basis.rows() == 4);
  CHECK(wp.dim == 3);
}

TEST_CASE("fiber compression detects non-constant fibers") {
  const DivisorLattice lat(two_two_example());
  const BasePoint far = BasePoint::rational(Rat(7));
  SymbolicDivisor d(2);
  d.add({far, 2, 0}, 1);
  CHECK_FALSE(lat.compress(d).has_value());
  d.add({far, 2, 1}, 1);
  d.add({far, 2, 2}, 1);
  d.add({far, 2, 3}, 2);
  CHECK_FALSE(lat.compress(d).has_value());
  CHECK(lat.compress(lat.fiber(far, 2))->at(far) == 1);
}

TEST_CASE("Smith normal form examples") {
  const auto id = smith_normal_form(to_int({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(id.elementary_divisors == std::vector<mpz_class>{1, 1, 1});
  const auto d = smith_normal_form(to_int({{2, 0}, {0, 3}}));
  CHECK(d.elementary_divisors == std::vector<mpz_class>{1, 6});
  // <a + b, c> inside Div{a, b, c}.
  const auto w = smith_normal_form(to_int({{1, 1, 0}, {0, 0, 1}}));
  CHECK(w.elementary_divisors == std::vector<mpz_class>{1, 1});
  CHECK(w.cokernel_torsion_free());
  const auto t = smith_normal_form(to_int({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  CHECK(t.elementary_divisors == std::vector<mpz_class>{2, 6, 12});
  const auto z = smith_normal_form(to_int({{0, 0}, {0, 0}}));
  CHECK(z.rank() == 0);
  const auto k = integer_kernel(to_int({{1, 1, 0}, {0, 0, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(k[0][2] == 0);
}

TEST_CASE("Smith normal form on random matrices") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<long> val(-20, 20);
  for (int i = 0; i < 200; ++i) {
    const int r = dim(rng);
    const int c = dim(rng);
    IntMatrix a(static_cast<std::size_t>(r), std::vector<mpz_class>(static_cast<std::size_t>(c)));
    for (auto& row : a) {
      for (auto& v : row) v = val(rng);
    }
    const auto sf = smith_normal_form(a);
    CHECK(multiply(multiply(sf.U, a), sf.V) == sf.D);
    for (std::size_t k = 1; k < sf.elementary_divisors.size(); ++k) {
      CHECK(sf.elementary_divisors[k] % sf.elementary_divisors[k - 1] == 0);
    }
    std::vector<std::vector<std::int64_t>> small;
    for (const auto& row : a) {
      std::vector<std::int64_t> sr;
      for (const auto& v : row) sr.push_back(v.get_si());
      small.push_back(sr);
    }
    std::size_t mod7 = 0;
    for (const auto& e : sf.elementary_divisors) mod7 += (e % 7 != 0);
    CHECK(mod7 == oracle::rank_mod(small, 7));
  }
}

TEST_CASE("disjoint reduced divisors generate a direct summand") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_int_distribution<int> size(1, 5);
  for (int family = 0; family < 60; ++family) {
    std::vector<SymbolicDivisor> gens;
    std::int64_t next = 0;
    const int k = count(rng);
    for (int g = 0; g < k; ++g) {
      SymbolicDivisor d(0);
      const int sz = size(rng);
      for (int i = 0; i < sz; ++i) d.add({BasePoint::rational(Rat(next++)), 0, 0}, 1);
      gens.push_back(d);
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      CHECK(gens[i].is_reduced());
      for (std::size_t j = i + 1; j < gens.size(); ++j) CHECK(gens[i].disjoint_from(gens[j]));
    }
    const auto sf = smith_normal_form(inclusion_matrix(gens));
    CHECK(sf.rank() == gens.size());
    CHECK(sf.cokernel_torsion_free());
  }
}

TEST_CASE("divisor identities on random models") {
  std::mt19937_64 rng(909);
  for (std::int64_t ell : {2, 3, 5}) {
    for (int n = 1; n <= 3; ++n) {
      for (int i = 0; i < 12; ++i) {
        const DivisorLattice lat(gen::random_irreducible_normalized(rng, ell, n, 2, 5));
        const auto pts = sample_points(lat);
        for (int s = 1; s <= n; ++s) {
          for (const auto& xi : pts) {
            const int j = lat.stratum(xi);
            const auto up = lat.pullback(lat.fiber(xi, s - 1));
            if (j < s) {
              CHECK(up == ell * lat.fiber(xi, s));
            } else {
              CHECK(up == lat.fiber(xi, s));
            }
            const auto total = lat.pullback_to(lat.fiber(xi, 0), s);
            if (j < s) {
              CHECK(total == ipow(ell, s - j) * lat.fiber(xi, s));
            } else {
              CHECK(total == lat.fiber(xi, s));
            }
            CHECK(lat.fiber(xi, s).degree() == ipow(ell, std::min(j, s)));
          }
          // Linearity on a random combination.
          std::uniform_int_distribution<std::int64_t> c(-3, 3);
          SymbolicDivisor d1(s - 1);
          SymbolicDivisor d2(s - 1);
          for (const auto& xi : pts) {
            d1 += c(rng) * lat.fiber(xi, s - 1);
            d2 += c(rng) * lat.fiber(xi, s - 1);
          }
          CHECK(lat.pullback(d1 + d2) == lat.pullback(d1) + lat.pullback(d2));

          for (const auto& xi : lat.branch_points_below(s)) {
            CHECK(ell * lat.d_divisor(xi, s) == lat.pullback(lat.d_divisor(xi, s - 1)));
            CHECK(lat.u_value(xi) % ell != 0);
          }
          const auto r = lat.r_divisor(s);
          CHECK(r.degree() == 0);
          const auto w = lat.ws_presentation(s);
          CHECK(w.dim == lat.strata().count_below(s) - 2);
          for (std::size_t k = 0; k < w.relation.cols(); ++k) CHECK(w.relation.at(0, k) != 0);
          // Independent rank of the relation over F_ell via Smith form.
          if (!w.relation_coords.empty()) {
            IntMatrix rel(1);
            for (auto v : w.relation_coords) rel[0].emplace_back(static_cast<long>(v));
            std::size_t rank = 0;
            for (const auto& e : smith_normal_form(rel).elementary_divisors) rank += (e % ell != 0);
            CHECK(w.dim == static_cast<std::int64_t>(w.relation.cols() - rank));
          }
          if (s < n) {
            const auto basis = lat.lattice_basis(s, true);
            std::vector<SymbolicDivisor> gens;
            for (const auto& [xi, d] : basis) gens.push_back(d);
            if (!gens.empty()) CHECK(smith_normal_form(inclusion_matrix(gens)).cokernel_torsion_free());
          }
        }
      }
    }
  }
}

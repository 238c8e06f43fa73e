#pragma once

// Integer polynomials used internally by the resultant and the
// irreducibility certificate. Not part of the public interface.

#include <vector>

#include <gmpxx.h>

#include "supertower/poly.hpp"

namespace supertower::detail {

using IntPoly = std::vector<mpz_class>;  // ascending, trimmed

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

/// Scales p by the lcm of its denominators; returns (integer polynomial, scale).
inline std::pair<IntPoly, mpz_class> clear_denominators(const Poly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.num() * (l / c.den()));
  return {out, l};
}

inline mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

inline IntPoly exact_div(const IntPoly& p, const mpz_class& d) {
  IntPoly out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mpz_divexact(out[i].get_mpz_t(), p[i].get_mpz_t(), d.get_mpz_t());
  return out;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, over Z.
inline IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const int db = degree(b);
  const mpz_class& lb = b.back();
  int steps = degree(a) - db + 1;
  while (!a.empty() && degree(a) >= db) {
    const mpz_class la = a.back();
    const int shift = degree(a) - db;
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= la * b[static_cast<std::size_t>(i)];
    trim(a);
    --steps;
  }
  if (steps > 0) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
    for (auto& c : a) c *= f;
  }
  return a;
}

}  // namespace supertower::detail

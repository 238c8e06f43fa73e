#include "supertower/resultant.hpp"

#include <utility>

#include "intpoly.hpp"
#include "supertower/errors.hpp"

namespace supertower {

namespace {

using detail::IntPoly;

mpz_class zpow(const mpz_class& b, long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

// Subresultant PRS over Z, both inputs of degree >= 1.
mpz_class int_resultant(IntPoly A, IntPoly B) {
  int s = 1;
  if (detail::degree(A) < detail::degree(B)) {
    std::swap(A, B);
    if ((detail::degree(A) & 1) && (detail::degree(B) & 1)) s = -1;
  }
  const mpz_class a = detail::content(A);
  const mpz_class b = detail::content(B);
  A = detail::exact_div(A, a);
  B = detail::exact_div(B, b);
  mpz_class g = 1;
  mpz_class h = 1;
  const mpz_class t = zpow(a, detail::degree(B)) * zpow(b, detail::degree(A));
  for (;;) {
    const int da = detail::degree(A);
    const int db = detail::degree(B);
    const int delta = da - db;
    if ((da & 1) && (db & 1)) s = -s;
    IntPoly R = detail::pseudo_remainder(A, B);
    A = std::move(B);
    if (R.empty()) return 0;
    B = detail::exact_div(R, g * zpow(h, delta));
    g = A.back();
    if (delta >= 1) {
      mpz_class num = zpow(g, delta);
      mpz_class den = zpow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (detail::degree(B) > 0) continue;
    const int dA = detail::degree(A);
    mpz_class num = zpow(B.back(), dA);
    mpz_class den = zpow(h, dA - 1);
    mpz_class res;
    mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return s * t * res;
  }
}

}  // namespace

Rat resultant(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) throw ArgumentError("resultant of the zero polynomial");
  if (q.degree() == 0) return q.leading().pow(p.degree());
  if (p.degree() == 0) return p.leading().pow(q.degree());
  auto [P, lp] = detail::clear_denominators(p);
  auto [Q, lq] = detail::clear_denominators(q);
  const Rat r(int_resultant(std::move(P), std::move(Q)));
  return r / (Rat(lp).pow(q.degree()) * Rat(lq).pow(p.degree()));
}

Rat discriminant(const Poly& p) {
  if (p.degree() < 1) throw ArgumentError("discriminant of a constant polynomial");
  const long d = p.degree();
  Rat r = resultant(p, p.derivative()) / p.leading();
  if (((d * (d - 1)) / 2) % 2 != 0) r = -r;
  return r;
}

}  // namespace supertower

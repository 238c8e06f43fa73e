#pragma once

#include "supertower/poly.hpp"
#include "supertower/rational.hpp"

namespace supertower {

// Sign conventions (the only place they are fixed):
//
//   Res(p, q) = det Sylvester(p, q), rows of p first
//             = lc(p)^deg q * prod_{p(a)=0} q(a)
//             = (-1)^(deg p * deg q) * lc(q)^deg p * prod_{q(b)=0} p(b)
//
//   disc(p)   = (-1)^(d(d-1)/2) * Res(p, p') / lc(p),   d = deg p
//
// so Res(x - 1, x - 3) = -2 and disc(x^2 + b x + c) = b^2 - 4c. Callers that
// only look at ell-adic valuations are insensitive to either sign.

/// Resultant of two nonzero polynomials. Computed with the fraction-free
/// subresultant remainder sequence after clearing denominators.
Rat resultant(const Poly& p, const Poly& q);

/// Discriminant of a polynomial of degree >= 1; degree 1 gives 1.
Rat discriminant(const Poly& p);

}  // namespace supertower

#pragma once

#include <vector>

#include <gmpxx.h>

namespace supertower {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... .
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  /// Nonzero diagonal entries of D, all positive, in divisibility order.
  std::vector<mpz_class> elementary_divisors;

  std::size_t rank() const { return elementary_divisors.size(); }
  /// True iff the cokernel Z^cols / rowspace(A) is torsion-free.
  bool cokernel_torsion_free() const;
};

/// Smith normal form by row/column elimination. The certificate
/// U * A * V == D is re-verified exactly before returning
/// (std::logic_error otherwise). All rows of A must have equal length.
SmithForm smith_normal_form(const IntMatrix& A);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Z-basis of {x : A x = 0}, one vector per entry.
std::vector<std::vector<mpz_class>> integer_kernel(const IntMatrix& A);

}  // namespace supertower

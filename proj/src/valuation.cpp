#include "supertower/valuation.hpp"

#include <limits>

#include "supertower/errors.hpp"

namespace supertower {

long Valuation::value() const {
  if (!value_) throw DomainError("valuation of zero is +infinity");
  return *value_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
  return Valuation(*a.value_ + *b.value_);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  // 2 = definitely prime; 1 = probably prime, which for 64-bit inputs
  // after 30 rounds is not known to have a counterexample.
  return mpz_probab_prime_p(mpz_class(static_cast<long>(n)).get_mpz_t(), 30) > 0;
}

long val_ell(const mpz_class& x, std::int64_t ell) {
  if (x == 0) throw ArgumentError("integer valuation of zero");
  const mpz_class p(static_cast<long>(ell));
  mpz_class rest = x;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

Valuation val_ell(const Rat& x, std::int64_t ell) {
  if (!is_prime(ell)) throw ArgumentError("ell must be prime, got " + std::to_string(ell));
  if (x.is_zero()) return Valuation::infinity();
  return Valuation(val_ell(x.num(), ell) - val_ell(x.den(), ell));
}

std::int64_t ipow(std::int64_t ell, int e) {
  if (e < 0) throw ArgumentError("negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (ell != 0 && r > std::numeric_limits<std::int64_t>::max() / ell) {
      throw ArgumentError("integer power overflows 64 bits");
    }
    r *= ell;
  }
  return r;
}

std::int64_t phi_prime_power(std::int64_t ell, int s) {
  if (s == 0) return 1;
  return ipow(ell, s - 1) * (ell - 1);
}

}  // namespace supertower

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "supertower/rational.hpp"

namespace supertower {

/// An ell-adic valuation: an integer, or +infinity for the valuation of 0.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  explicit Valuation(long v) : value_(v) {}

  bool is_infinite() const { return !value_.has_value(); }
  long value() const;  // throws DomainError on +infinity

  bool is_unit() const { return value_ && *value_ == 0; }
  bool is_integral() const { return !value_ || *value_ >= 0; }

  std::string str() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend Valuation operator+(const Valuation& a, const Valuation& b);
  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  Valuation() = default;
  std::optional<long> value_;
};

bool is_prime(std::int64_t n);

/// Exponent of ell in a nonzero integer.
long val_ell(const mpz_class& x, std::int64_t ell);

/// Exponent of ell in x; +infinity for x = 0. Throws ArgumentError if ell is not prime.
Valuation val_ell(const Rat& x, std::int64_t ell);

/// ell^e as a checked 64-bit integer; throws ArgumentError on overflow.
std::int64_t ipow(std::int64_t ell, int e);

/// Euler's phi at ell^s (s >= 0).
std::int64_t phi_prime_power(std::int64_t ell, int s);

}  // namespace supertower

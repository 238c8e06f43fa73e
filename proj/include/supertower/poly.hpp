#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "supertower/rational.hpp"

namespace supertower {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

  static Poly constant(const Rat& c) { return Poly({c}); }
  static Poly x() { return Poly({Rat(0), Rat(1)}); }
  /// The monic linear polynomial x - root.
  static Poly linear(const Rat& root) { return Poly({-root, Rat(1)}); }
  static Poly monomial(const Rat& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == Rat(1); }
  const std::vector<Rat>& coeffs() const { return c_; }
  /// Coefficient of x^i; zero past the degree.
  Rat coeff(int i) const;
  const Rat& leading() const;

  Poly monic() const;
  Poly derivative() const;
  Rat eval(const Rat& at) const;

  std::string str(char var = 'x') const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Canonical order on places: degree first, then coefficients from the
/// constant term upwards.
bool canonical_less(const Poly& a, const Poly& b);

/// Quotient and remainder; throws ArgumentError on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

Poly pow(const Poly& p, long e);

/// base^e mod m by repeated squaring.
Poly powmod(const Poly& base, std::int64_t e, const Poly& m);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace supertower

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "supertower/poly.hpp"

namespace supertower {

enum class Irreducibility { Irreducible, Reducible, Unknown };

struct IrreducibilityCertificate {
  Irreducibility status = Irreducibility::Unknown;
  /// Nontrivial factor, set when Reducible.
  std::optional<Poly> witness;
  /// Rational root behind the witness, when there is one.
  std::optional<Rat> root;
  /// Good primes whose factorization degree pattern was consulted.
  std::vector<std::int64_t> primes;

  std::string str() const;
};

/// Primes tried for degree-pattern arguments.
inline constexpr std::int64_t kCertificatePrimes[] = {2, 3, 5, 7, 11, 13};

/// Decide irreducibility over Q of a monic polynomial, or give up.
///
/// Reducible needs a witness (a rational root, or a repeated factor).
/// Irreducible needs a proof: degree 1; degree <= 3 with an exhaustive
/// rational-root search; or an empty intersection of the possible proper
/// factor degrees over the good primes in kCertificatePrimes (a prime is
/// good if it divides neither a coefficient denominator nor the
/// discriminant). Anything else is Unknown.
///
/// Throws ArgumentError for non-monic input.
IrreducibilityCertificate certify_irreducible(const Poly& p);

/// All rational roots, or nullopt if the candidate search was too large to
/// be exhaustive.
std::optional<std::vector<Rat>> rational_roots(const Poly& p);

/// Degrees of the irreducible factors of p mod prime (p must be square-free
/// mod prime with p-integral coefficients), sorted ascending.
std::vector<int> factor_degree_pattern(const Poly& p, std::int64_t prime);

}  // namespace supertower

#include "supertower/irreducible.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "intpoly.hpp"
#include "supertower/errors.hpp"
#include "supertower/resultant.hpp"
#include "supertower/squarefree.hpp"

namespace supertower {

namespace {

constexpr unsigned long kTrialLimit = 1000000;
constexpr std::size_t kMaxCandidates = 200000;

// Positive divisors of |n| (n != 0), or nullopt if n has a factor we could
// not split by trial division.
std::optional<std::vector<mpz_class>> divisors(const mpz_class& n) {
  mpz_class m = abs(n);
  std::vector<std::pair<mpz_class, int>> fac;
  for (unsigned long d = 2; d <= kTrialLimit && m > 1; ++d) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), d) == 0) continue;
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), d) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
      ++e;
    }
    fac.emplace_back(mpz_class(d), e);
  }
  if (m > 1) {
    // A cofactor below kTrialLimit^2 with no small factor is prime.
    if (m > mpz_class(kTrialLimit) * mpz_class(kTrialLimit)) return std::nullopt;
    fac.emplace_back(m, 1);
  }
  std::vector<mpz_class> out{1};
  for (const auto& [prime, e] : fac) {
    const std::size_t base = out.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
    if (out.size() > kMaxCandidates) return std::nullopt;
  }
  return out;
}

// Dense polynomials over F_p, ascending, trimmed.
using Fp = std::vector<std::int64_t>;

void fp_trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t fp_inv(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1;
  std::int64_t e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

Fp fp_mod(Fp a, const Fp& m, std::int64_t p) {
  const std::size_t dm = m.size() - 1;
  const std::int64_t inv = fp_inv(m.back(), p);
  while (!a.empty() && a.size() - 1 >= dm) {
    const std::int64_t q = a.back() * inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[i + shift] = ((a[i + shift] - q * m[i]) % p + p) % p;
    }
    fp_trim(a);
  }
  return a;
}

Fp fp_mul(const Fp& a, const Fp& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Fp out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  fp_trim(out);
  return out;
}

Fp fp_gcd(Fp a, Fp b, std::int64_t p) {
  while (!b.empty()) {
    Fp r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::int64_t inv = fp_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

Fp fp_div(Fp a, const Fp& b, std::int64_t p) {
  const std::size_t db = b.size() - 1;
  const std::int64_t inv = fp_inv(b.back(), p);
  Fp q(a.size() - db, 0);
  while (!a.empty() && a.size() - 1 >= db) {
    const std::int64_t c = a.back() * inv % p;
    const std::size_t shift = a.size() - 1 - db;
    q[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] = ((a[i + shift] - c * b[i]) % p + p) % p;
    fp_trim(a);
  }
  fp_trim(q);
  return q;
}

Fp fp_powmod(Fp base, std::int64_t e, const Fp& m, std::int64_t p) {
  Fp r = fp_mod(Fp{1}, m, p);
  base = fp_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = fp_mod(fp_mul(r, base, p), m, p);
    base = fp_mod(fp_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

Fp reduce_mod(const Poly& f, std::int64_t p) {
  Fp out;
  const mpz_class P(static_cast<long>(p));
  for (const auto& c : f.coeffs()) {
    mpz_class d;
    mpz_invert(d.get_mpz_t(), c.den().get_mpz_t(), P.get_mpz_t());
    mpz_class v = (c.num() * d) % P;
    if (v < 0) v += P;
    out.push_back(v.get_si());
  }
  fp_trim(out);
  return out;
}

bool is_good_prime(const Poly& f, const Rat& disc, std::int64_t p) {
  for (const auto& c : f.coeffs()) {
    if (mpz_divisible_ui_p(c.den().get_mpz_t(), static_cast<unsigned long>(p)) != 0) return false;
  }
  return mpz_divisible_ui_p(disc.num().get_mpz_t(), static_cast<unsigned long>(p)) == 0;
}

// Proper subset sums (1..d-1) of a degree multiset.
std::set<int> proper_subset_sums(const std::vector<int>& pattern, int d) {
  std::vector<bool> reach(static_cast<std::size_t>(d) + 1, false);
  reach[0] = true;
  for (int part : pattern) {
    for (int s = d; s >= part; --s) {
      if (reach[static_cast<std::size_t>(s - part)]) reach[static_cast<std::size_t>(s)] = true;
    }
  }
  std::set<int> out;
  for (int s = 1; s < d; ++s) {
    if (reach[static_cast<std::size_t>(s)]) out.insert(s);
  }
  return out;
}

}  // namespace

std::string IrreducibilityCertificate::str() const {
  switch (status) {
    case Irreducibility::Irreducible:
      return "irreducible";
    case Irreducibility::Reducible: {
      std::ostringstream os;
      os << "reducible (";
      if (root) {
        os << "root " << *root;
      } else {
        os << "factor " << *witness;
      }
      os << ")";
      return os.str();
    }
    case Irreducibility::Unknown:
      return "unknown";
  }
  return "unknown";
}

std::optional<std::vector<Rat>> rational_roots(const Poly& p) {
  if (p.degree() < 1) return std::vector<Rat>{};
  std::vector<Rat> roots;
  Poly f = p;
  // Strip roots at zero first so the constant term is nonzero.
  if (f.coeff(0).is_zero()) {
    roots.emplace_back(0);
    while (f.coeff(0).is_zero()) f = divmod(f, Poly::x()).first;
    if (f.degree() < 1) return roots;
  }
  auto [P, scale] = detail::clear_denominators(f);
  P = detail::exact_div(P, detail::content(P));
  const auto num_divs = divisors(P.front());
  const auto den_divs = divisors(P.back());
  if (!num_divs || !den_divs || num_divs->size() * den_divs->size() > kMaxCandidates) {
    return std::nullopt;
  }
  std::set<Rat> found;
  for (const auto& a : *num_divs) {
    for (const auto& b : *den_divs) {
      for (int sign : {1, -1}) {
        const Rat cand(sign * a, b);
        if (f.eval(cand).is_zero()) found.insert(cand);
      }
    }
  }
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<int> factor_degree_pattern(const Poly& p, std::int64_t prime) {
  Fp f = reduce_mod(p, prime);
  if (f.size() < 2) throw ArgumentError("degree drops modulo the prime");
  std::vector<int> pattern;
  Fp h{0, 1};
  for (int i = 1; 2 * i <= static_cast<int>(f.size()) - 1; ++i) {
    h = fp_powmod(h, prime, f, prime);
    Fp hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = ((hx[1] - 1) % prime + prime) % prime;
    fp_trim(hx);
    Fp g = fp_gcd(f, hx, prime);
    if (g.size() > 1) {
      const int count = (static_cast<int>(g.size()) - 1) / i;
      for (int k = 0; k < count; ++k) pattern.push_back(i);
      f = fp_div(f, g, prime);
      h = fp_mod(h, f, prime);
    }
  }
  if (f.size() > 1) pattern.push_back(static_cast<int>(f.size()) - 1);
  std::sort(pattern.begin(), pattern.end());
  return pattern;
}

IrreducibilityCertificate certify_irreducible(const Poly& p) {
  if (!p.is_monic()) throw ArgumentError("certify_irreducible expects a monic polynomial, got " + p.str());
  IrreducibilityCertificate cert;
  const int d = p.degree();
  if (d <= 0) throw ArgumentError("certify_irreducible expects a nonconstant polynomial");
  if (d == 1) {
    cert.status = Irreducibility::Irreducible;
    return cert;
  }
  if (!is_squarefree(p)) {
    cert.status = Irreducibility::Reducible;
    cert.witness = gcd(p, p.derivative());
    return cert;
  }
  const auto roots = rational_roots(p);
  if (roots && !roots->empty()) {
    cert.status = Irreducibility::Reducible;
    cert.root = roots->front();
    cert.witness = Poly::linear(roots->front());
    return cert;
  }
  if (roots && d <= 3) {
    cert.status = Irreducibility::Irreducible;
    return cert;
  }

  const Rat disc = discriminant(p);
  std::optional<std::set<int>> possible;
  for (std::int64_t prime : kCertificatePrimes) {
    if (!is_good_prime(p, disc, prime)) continue;
    cert.primes.push_back(prime);
    const auto sums = proper_subset_sums(factor_degree_pattern(p, prime), d);
    if (!possible) {
      possible = sums;
    } else {
      std::set<int> both;
      std::set_intersection(possible->begin(), possible->end(), sums.begin(), sums.end(),
                            std::inserter(both, both.begin()));
      possible = std::move(both);
    }
    if (possible->empty()) {
      cert.status = Irreducibility::Irreducible;
      return cert;
    }
  }
  return cert;
}

}  // namespace supertower

#include "supertower/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "supertower/errors.hpp"

namespace supertower {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rat& c, int degree) {
  if (c.is_zero()) return Poly();
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[static_cast<std::size_t>(i)];
}

const Rat& Poly::leading() const {
  if (c_.empty()) throw ArgumentError("leading coefficient of the zero polynomial");
  return c_.back();
}

Poly Poly::monic() const {
  if (is_zero()) throw ArgumentError("monic part of the zero polynomial");
  const Rat inv = leading().inverse();
  Poly r = *this;
  r *= inv;
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(d));
}

Rat Poly::eval(const Rat& at) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::string Poly::str(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rat mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != Rat(1)) {
      os << mag;
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  for (auto& a : c_) a *= c;
  trim();
  return *this;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  r *= Rat(-1);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(out));
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(),
                                      b.coeffs().begin(), b.coeffs().end());
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ArgumentError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rat> rem = a.coeffs();
  std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rat inv = b.leading().inverse();
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rat q = rem[k + db] * inv;
    quo[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= q * b.coeffs()[i];
  }
  rem.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

Poly pow(const Poly& p, long e) {
  if (e < 0) throw ArgumentError("negative polynomial power");
  Poly result = Poly::constant(Rat(1));
  Poly base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly powmod(const Poly& base, std::int64_t e, const Poly& m) {
  if (e < 0) throw ArgumentError("negative exponent in powmod");
  Poly result = divmod(Poly::constant(Rat(1)), m).second;
  Poly b = divmod(base, m).second;
  while (e > 0) {
    if (e & 1) result = divmod(result * b, m).second;
    e >>= 1;
    if (e > 0) b = divmod(b * b, m).second;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace supertower

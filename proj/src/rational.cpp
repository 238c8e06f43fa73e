#include "supertower/rational.hpp"

#include <cctype>
#include <ostream>

#include "supertower/errors.hpp"

namespace supertower {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ArgumentError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_decimal_integer(text)) {
      throw ArgumentError("not a rational number: '" + std::string(text) + "'");
    }
    return Rat(parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den)) {
    throw ArgumentError("not a rational number: '" + std::string(text) + "'");
  }
  return Rat(parse_integer(num), parse_integer(den));
}

Rat Rat::inverse() const {
  if (is_zero()) throw ArgumentError("inverse of zero");
  return Rat(v_.get_den(), v_.get_num());
}

Rat Rat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n;
  mpz_class d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rat(n, d);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw ArgumentError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace supertower

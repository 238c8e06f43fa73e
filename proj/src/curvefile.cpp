#include "supertower/curvefile.hpp"

#include <regex>
#include <set>

#include "supertower/errors.hpp"
#include "supertower/valuation.hpp"

namespace supertower {

namespace {

using nlohmann::json;

void only_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw ParseError("unknown key \"" + key + "\" in " + where);
  }
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError("missing \"" + key + "\" in " + where);
  return *it;
}

std::int64_t integer(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw ParseError(what + " must be an integer");
  return v.get<std::int64_t>();
}

Rat rational(const json& v, const std::string& what) {
  if (!v.is_string()) throw ParseError(what + " must be a string");
  const auto s = v.get<std::string>();
  static const std::regex zero_den(R"([+-]?[0-9]+/[+-]?0+)");
  if (std::regex_match(s, zero_den)) throw ValidationError(what + " has a zero denominator");
  try {
    return Rat::parse(s);
  } catch (const ArgumentError& e) {
    throw ParseError(what + ": " + e.what());
  }
}

mpz_class decimal(const json& v, const std::string& what) {
  const Rat r = rational(v, what);
  if (!r.is_integer() || v.get<std::string>().find('/') != std::string::npos) {
    throw ParseError(what + " must be a decimal integer string");
  }
  return r.num();
}

}  // namespace

CurveFile parse_curve_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("curve file must be a JSON object");
  only_keys(doc, {"ell", "n", "lambda", "factors", "assertions"}, "curve file");

  CurveFile out;
  out.ell = integer(field(doc, "ell", "curve file"), "ell");
  const std::int64_t n = integer(field(doc, "n", "curve file"), "n");

  const json& lam = field(doc, "lambda", "curve file");
  if (!lam.is_object()) throw ParseError("lambda must be an object {num, den}");
  only_keys(lam, {"num", "den"}, "lambda");
  const mpz_class num = decimal(field(lam, "num", "lambda"), "lambda.num");
  const mpz_class den = decimal(field(lam, "den", "lambda"), "lambda.den");

  const json& factors = field(doc, "factors", "curve file");
  if (!factors.is_array()) throw ParseError("factors must be an array");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::string where = "factors[" + std::to_string(i) + "]";
    const json& f = factors[i];
    if (!f.is_object()) throw ParseError(where + " must be an object {coeffs, mult}");
    only_keys(f, {"coeffs", "mult"}, where);
    const json& coeffs = field(f, "coeffs", where);
    if (!coeffs.is_array() || coeffs.empty()) throw ParseError(where + ".coeffs must be a nonempty array");
    std::vector<Rat> c;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      c.push_back(rational(coeffs[k], where + ".coeffs[" + std::to_string(k) + "]"));
    }
    out.factors.push_back({Poly(std::move(c)), integer(field(f, "mult", where), where + ".mult")});
  }

  if (const auto it = doc.find("assertions"); it != doc.end()) {
    if (!it->is_object()) throw ParseError("assertions must be an object");
    only_keys(*it, {"splits_over_ten"}, "assertions");
    if (const auto s = it->find("splits_over_ten"); s != it->end()) {
      if (!s->is_boolean()) throw ParseError("assertions.splits_over_ten must be a boolean");
      out.assert_splits = s->get<bool>();
    }
  }

  // Value checks.
  if (!is_prime(out.ell)) throw ValidationError("ell must be prime, got " + std::to_string(out.ell));
  if (n < 1 || n > 64) throw ValidationError("n must be a positive integer, got " + std::to_string(n));
  out.n = static_cast<int>(n);
  if (den == 0) throw ValidationError("lambda has a zero denominator");
  if (num == 0) throw ValidationError("lambda must be nonzero");
  out.lambda = Rat(num, den);
  if (out.factors.empty()) throw ValidationError("factors must not be empty");
  for (std::size_t i = 0; i < out.factors.size(); ++i) {
    if (out.factors[i].multiplicity == 0) {
      throw ValidationError("factors[" + std::to_string(i) + "] has multiplicity 0");
    }
    if (out.factors[i].poly.degree() < 1) throw ValidationError("factors[" + std::to_string(i) + "] is constant");
  }
  return out;
}

CurveModel to_model(const CurveFile& file) {
  return CurveModel::from_factors(file.ell, file.n, file.lambda, file.factors);
}

nlohmann::json to_json(const CurveFile& file) {
  json factors = json::array();
  for (const auto& f : file.factors) {
    json coeffs = json::array();
    for (const auto& c : f.poly.coeffs()) coeffs.push_back(c.str());
    factors.push_back({{"coeffs", coeffs}, {"mult", f.multiplicity}});
  }
  return {{"ell", file.ell},
          {"n", file.n},
          {"lambda", {{"num", file.lambda.num().get_str()}, {"den", file.lambda.den().get_str()}}},
          {"factors", factors},
          {"assertions", {{"splits_over_ten", file.assert_splits}}}};
}

CurveFile curve_file_of(const CurveModel& model, bool assert_splits) {
  CurveFile f;
  f.ell = model.ell();
  f.n = model.n();
  f.lambda = model.lambda();
  for (const auto& pl : model.places()) f.factors.push_back({pl.poly, pl.exponent});
  f.assert_splits = assert_splits;
  return f;
}

}  // namespace supertower

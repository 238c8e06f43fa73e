#include "supertower/model.hpp"

#include <algorithm>
#include <map>

#include "supertower/errors.hpp"
#include "supertower/irreducible.hpp"
#include "supertower/squarefree.hpp"
#include "supertower/valuation.hpp"

namespace supertower {

namespace {

constexpr std::int64_t kMaxExponent = std::int64_t{1} << 40;

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  // b > 0
  std::int64_t q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// X^d * p(c + 1/X) = sum_i a_i X^(d-i) (cX + 1)^i
Poly invert_around(const Poly& p, const Rat& c) {
  const int d = p.degree();
  const Poly lin{Rat(1), c};
  Poly out;
  Poly lin_pow = Poly::constant(Rat(1));
  for (int i = 0; i <= d; ++i) {
    out += Poly::monomial(Rat(1), d - i) * lin_pow * p.coeff(i);
    lin_pow = lin_pow * lin;
  }
  return out;
}

}  // namespace

CurveModel CurveModel::build(std::int64_t ell, int n, const Rat& lambda, std::vector<Place> places) {
  if (!is_prime(ell)) throw ValidationError("ell must be prime, got " + std::to_string(ell));
  if (n < 1) throw ValidationError("n must be at least 1, got " + std::to_string(n));
  if (lambda.is_zero()) throw ValidationError("lambda must be nonzero");
  std::int64_t degree = 0;
  try {
    degree = ipow(ell, n);
  } catch (const ArgumentError&) {
    throw ValidationError("ell^n overflows");
  }
  if (degree > kMaxCoverDegree) {
    throw ValidationError("ell^n = " + std::to_string(degree) + " exceeds the supported bound 4096");
  }
  for (const auto& pl : places) {
    if (pl.poly.degree() < 1) throw ValidationError("place polynomial must be nonconstant");
    if (!pl.poly.is_monic()) throw ValidationError("place polynomial must be monic: " + pl.poly.str());
    if (pl.exponent == 0) throw ValidationError("place exponent must be nonzero: " + pl.poly.str());
    if (pl.exponent > kMaxExponent || pl.exponent < -kMaxExponent) {
      throw ValidationError("place exponent out of range: " + std::to_string(pl.exponent));
    }
    if (!is_squarefree(pl.poly)) throw ValidationError("place polynomial is not square-free: " + pl.poly.str());
  }
  std::sort(places.begin(), places.end(),
            [](const Place& a, const Place& b) { return canonical_less(a.poly, b.poly); });
  for (std::size_t i = 0; i < places.size(); ++i) {
    for (std::size_t j = i + 1; j < places.size(); ++j) {
      if (gcd(places[i].poly, places[j].poly).degree() > 0) {
        throw ValidationError("places share a root: " + places[i].poly.str() + " and " + places[j].poly.str());
      }
    }
  }
  CurveModel m;
  m.ell_ = ell;
  m.n_ = n;
  m.cover_degree_ = degree;
  m.lambda_ = lambda;
  m.places_ = std::move(places);
  return m;
}

CurveModel CurveModel::from_factors(std::int64_t ell, int n, const Rat& lambda,
                                    const std::vector<Factor>& factors) {
  if (factors.empty()) throw ValidationError("at least one factor is required");
  if (lambda.is_zero()) throw ValidationError("lambda must be nonzero");
  Rat lam = lambda;
  std::vector<Place> places;
  places.reserve(factors.size());
  for (const auto& f : factors) {
    if (f.poly.degree() < 1) throw ValidationError("factor must be nonconstant");
    if (f.multiplicity == 0) throw ValidationError("factor multiplicity must be nonzero: " + f.poly.str());
    if (f.multiplicity > kMaxExponent || f.multiplicity < -kMaxExponent) {
      throw ValidationError("factor multiplicity out of range");
    }
    lam *= f.poly.leading().pow(f.multiplicity);
    Place pl{f.poly.monic(), f.multiplicity, IrreducibilityStatus::Certified};
    if (!is_squarefree(pl.poly)) throw ValidationError("factor is not square-free: " + f.poly.str());
    const auto cert = certify_irreducible(pl.poly);
    if (cert.status == Irreducibility::Reducible) {
      throw ValidationError("factor " + f.poly.str() + " is " + cert.str());
    }
    if (cert.status == Irreducibility::Unknown) pl.status = IrreducibilityStatus::Assumed;
    places.push_back(std::move(pl));
  }
  return build(ell, n, lam, std::move(places));
}

CurveModel CurveModel::from_places(std::int64_t ell, int n, const Rat& lambda, std::vector<Place> places) {
  return build(ell, n, lambda, std::move(places));
}

CurveModel CurveModel::normalized(std::int64_t ell, int n, const Rat& lambda, std::vector<Place> places) {
  CurveModel m = build(ell, n, lambda, std::move(places));
  for (const auto& pl : m.places_) {
    if (pl.exponent <= 0 || pl.exponent >= m.cover_degree_) {
      throw ValidationError("normalized model needs 0 < exponent < ell^n, got " + std::to_string(pl.exponent));
    }
  }
  if (m.infinity_branched()) throw ValidationError("normalized model must not branch at infinity");
  m.normalized_ = true;
  return m;
}

std::int64_t CurveModel::infinity_exponent() const {
  std::int64_t e = 0;
  for (const auto& pl : places_) e += pl.exponent * pl.degree();
  return e;
}

bool CurveModel::is_polynomial() const {
  return std::all_of(places_.begin(), places_.end(), [](const Place& p) { return p.exponent > 0; });
}

Poly CurveModel::expand() const {
  if (!is_polynomial()) throw DomainError("expand() needs nonnegative exponents");
  Poly f = Poly::constant(lambda_);
  for (const auto& pl : places_) f = f * pow(pl.poly, pl.exponent);
  return f;
}

std::vector<BranchEntry> branch_set(const CurveModel& model) {
  std::vector<BranchEntry> out;
  for (std::size_t i = 0; i < model.places().size(); ++i) {
    const auto e = model.places()[i].exponent;
    if (e % model.cover_degree() != 0) out.push_back({i, e});
  }
  if (model.infinity_branched()) out.push_back({std::nullopt, model.infinity_exponent()});
  return out;
}

ProjectivePoint pivot_select(const CurveModel& model) {
  if (!model.infinity_branched()) return {};
  for (long c = 0;; ++c) {
    const Rat at(c);
    const bool clear = std::none_of(model.places().begin(), model.places().end(),
                                    [&](const Place& p) { return p.poly.eval(at).is_zero(); });
    if (clear) return {at};
  }
}

Normalization normalize(const CurveModel& model) {
  if (model.places().empty()) throw DomainError("f is constant; there is no curve to normalize");
  const std::int64_t N = model.cover_degree();
  const ProjectivePoint pivot = pivot_select(model);

  Rat lambda = model.lambda();
  std::vector<Place> moved;
  if (pivot.is_infinity()) {
    moved = model.places();
  } else {
    const Rat& c = *pivot.value;
    for (const auto& pl : model.places()) {
      const Rat head = pl.poly.eval(c);
      lambda *= head.pow(pl.exponent);
      moved.push_back({invert_around(pl.poly, c) * head.inverse(), pl.exponent, pl.status});
    }
    moved.push_back({Poly::x(), -model.infinity_exponent(), IrreducibilityStatus::Certified});
  }

  MobiusRecord record{pivot, {}};
  std::vector<Place> kept;
  for (auto& pl : moved) {
    const std::int64_t shift = ceil_div(-pl.exponent, N);
    const std::int64_t reduced = pl.exponent + shift * N;
    if (reduced != mod_floor(pl.exponent, N)) throw std::logic_error("exponent reduction out of range");
    if (shift != 0) record.y_rescale.push_back({pl.poly, -shift});
    if (reduced == 0) continue;
    pl.exponent = reduced;
    kept.push_back(std::move(pl));
  }
  std::sort(record.y_rescale.begin(), record.y_rescale.end(),
            [](const YRescale& a, const YRescale& b) { return canonical_less(a.poly, b.poly); });
  return {CurveModel::normalized(model.ell(), model.n(), lambda, std::move(kept)), std::move(record)};
}

}  // namespace supertower

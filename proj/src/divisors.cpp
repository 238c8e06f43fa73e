#include "supertower/divisors.hpp"

#include <set>
#include <stdexcept>

#include "supertower/errors.hpp"
#include "supertower/valuation.hpp"

namespace supertower {

std::string BasePoint::str() const {
  switch (kind) {
    case Kind::Root:
      return "place" + std::to_string(place) + ".root" + std::to_string(root);
    case Kind::Infinity:
      return "inf";
    case Kind::Rational:
      return "x=" + value.str();
  }
  return "?";
}

// ---- SymbolicDivisor ----

std::int64_t SymbolicDivisor::coeff(const PointLabel& p) const {
  const auto it = coeffs_.find(p);
  return it == coeffs_.end() ? 0 : it->second;
}

void SymbolicDivisor::add(const PointLabel& p, std::int64_t c) {
  if (p.level != level_) throw ArgumentError("point label on the wrong level");
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

std::int64_t SymbolicDivisor::degree() const {
  std::int64_t d = 0;
  for (const auto& [p, c] : coeffs_) d += c;
  return d;
}

bool SymbolicDivisor::is_reduced() const {
  if (coeffs_.empty()) return false;
  for (const auto& [p, c] : coeffs_) {
    if (c != 1) return false;
  }
  return true;
}

bool SymbolicDivisor::disjoint_from(const SymbolicDivisor& o) const {
  for (const auto& [p, c] : coeffs_) {
    if (o.coeffs_.contains(p)) return false;
  }
  return true;
}

void SymbolicDivisor::check_level(const SymbolicDivisor& o) const {
  if (o.level_ != level_) throw ArgumentError("divisors live on different levels");
}

SymbolicDivisor& SymbolicDivisor::operator+=(const SymbolicDivisor& o) {
  check_level(o);
  for (const auto& [p, c] : o.coeffs_) add(p, c);
  return *this;
}

SymbolicDivisor& SymbolicDivisor::operator-=(const SymbolicDivisor& o) {
  check_level(o);
  for (const auto& [p, c] : o.coeffs_) add(p, -c);
  return *this;
}

SymbolicDivisor& SymbolicDivisor::operator*=(std::int64_t c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [p, v] : coeffs_) v *= c;
  return *this;
}

// ---- FlMatrix ----

FlMatrix::FlMatrix(std::int64_t ell, std::vector<std::string> row_labels, std::vector<std::string> col_labels)
    : ell_(ell), row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)),
      data_(row_labels_.size() * col_labels_.size(), 0) {
  if (!is_prime(ell)) throw ArgumentError("FlMatrix needs a prime modulus");
}

void FlMatrix::set(std::size_t r, std::size_t c, std::int64_t v) {
  if (r >= rows() || c >= cols()) throw ArgumentError("FlMatrix index out of range");
  v %= ell_;
  if (v < 0) v += ell_;
  data_[r * cols() + c] = v;
}

std::size_t FlMatrix::rank() const {
  std::vector<std::int64_t> m = data_;
  const std::size_t nr = rows();
  const std::size_t nc = cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < nc && rank < nr; ++c) {
    std::size_t piv = rank;
    while (piv < nr && m[piv * nc + c] == 0) ++piv;
    if (piv == nr) continue;
    for (std::size_t k = 0; k < nc; ++k) std::swap(m[piv * nc + k], m[rank * nc + k]);
    const mpz_class inv_z = [&] {
      mpz_class r;
      mpz_invert(r.get_mpz_t(), mpz_class(static_cast<long>(m[rank * nc + c])).get_mpz_t(),
                 mpz_class(static_cast<long>(ell_)).get_mpz_t());
      return r;
    }();
    const std::int64_t inv = inv_z.get_si();
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == rank || m[r * nc + c] == 0) continue;
      const std::int64_t f = m[r * nc + c] * inv % ell_;
      for (std::size_t k = 0; k < nc; ++k) {
        m[r * nc + k] = ((m[r * nc + k] - f * m[rank * nc + k]) % ell_ + ell_) % ell_;
      }
    }
    ++rank;
  }
  return rank;
}

// ---- DivisorLattice ----

DivisorLattice::DivisorLattice(const CurveModel& model) : model_(model) {
  if (!model.is_normalized()) throw ArgumentError("divisor lattice expects a normalized model");
  if (check_irreducible(model) != GeometricIrreducibility::Irreducible) {
    throw DomainError("divisor lattice needs a geometrically irreducible model");
  }
  strat_ = stratify(model_);
  // Places are already in canonical order, so the first S[0] place is the
  // minimal one.
  bool found = false;
  for (std::size_t i = 0; i < model_.places().size(); ++i) {
    if (strat_.place_stratum[i] == 0) {
      pivot_place_ = i;
      found = true;
      break;
    }
  }
  if (!found) throw DomainError("S[0] is empty");
}

void DivisorLattice::check_point(const BasePoint& xi) const {
  switch (xi.kind) {
    case BasePoint::Kind::Root:
      if (xi.place >= model_.places().size() || xi.root < 0 ||
          xi.root >= model_.places()[xi.place].degree()) {
        throw ArgumentError("unknown point " + xi.str());
      }
      return;
    case BasePoint::Kind::Infinity:
      return;
    case BasePoint::Kind::Rational:
      for (const auto& pl : model_.places()) {
        if (pl.poly.eval(xi.value).is_zero()) {
          throw ArgumentError("rational point " + xi.str() + " is a root of a place; name it by its root");
        }
      }
      return;
  }
}

void DivisorLattice::check_level(int s) const {
  if (s < 0 || s > n()) throw ArgumentError("level " + std::to_string(s) + " outside 0.." + std::to_string(n()));
}

int DivisorLattice::stratum(const BasePoint& xi) const {
  check_point(xi);
  if (xi.kind != BasePoint::Kind::Root) return n();
  return strat_.place_stratum[xi.place];
}

std::int64_t DivisorLattice::fiber_size(const BasePoint& xi, int s) const {
  check_level(s);
  return ipow(ell(), std::min(stratum(xi), s));
}

std::vector<BasePoint> DivisorLattice::branch_points() const {
  std::vector<BasePoint> out;
  for (std::size_t i = 0; i < model_.places().size(); ++i) {
    for (int r = 0; r < model_.places()[i].degree(); ++r) out.push_back(BasePoint::root_of(i, r));
  }
  return out;
}

std::vector<BasePoint> DivisorLattice::branch_points_below(int s, bool include_level) const {
  const int bound = include_level ? s + 1 : s;
  std::vector<BasePoint> out;
  for (const auto& xi : branch_points()) {
    if (strat_.place_stratum[xi.place] < bound) out.push_back(xi);
  }
  return out;
}

SymbolicDivisor DivisorLattice::fiber(const BasePoint& xi, int s) const {
  const std::int64_t size = fiber_size(xi, s);
  SymbolicDivisor d(s);
  for (std::int64_t i = 0; i < size; ++i) d.add({xi, s, i}, 1);
  return d;
}

SymbolicDivisor DivisorLattice::pullback(const SymbolicDivisor& div) const {
  const int s = div.level() + 1;
  if (s > n()) throw ArgumentError("cannot pull back past the top of the tower");
  check_level(div.level());
  SymbolicDivisor out(s);
  for (const auto& [p, c] : div.coeffs()) {
    if (p.fiber < 0 || p.fiber >= fiber_size(p.base, div.level())) {
      throw ArgumentError("fiber index out of range for " + p.base.str());
    }
    if (stratum(p.base) < s) {
      out.add({p.base, s, p.fiber}, c * ell());
    } else {
      for (std::int64_t k = 0; k < ell(); ++k) out.add({p.base, s, p.fiber * ell() + k}, c);
    }
  }
  return out;
}

std::optional<std::map<BasePoint, std::int64_t>> DivisorLattice::compress(const SymbolicDivisor& div) const {
  std::map<BasePoint, std::int64_t> out;
  std::map<BasePoint, std::int64_t> seen;
  for (const auto& [p, c] : div.coeffs()) {
    auto [it, inserted] = out.try_emplace(p.base, c);
    if (!inserted && it->second != c) return std::nullopt;
    ++seen[p.base];
  }
  for (const auto& [base, count] : seen) {
    if (count != fiber_size(base, div.level())) return std::nullopt;
  }
  return out;
}

SymbolicDivisor DivisorLattice::pullback_to(const SymbolicDivisor& div, int s) const {
  check_level(s);
  if (s < div.level()) throw ArgumentError("pullback target below the divisor's level");
  SymbolicDivisor cur = div;
  while (cur.level() < s) cur = pullback(cur);
  return cur;
}

SymbolicDivisor DivisorLattice::d_divisor(const BasePoint& xi, int s) const {
  check_level(s);
  const int j = stratum(xi);
  if (j >= n() || xi.kind != BasePoint::Kind::Root) throw ArgumentError("D_{s,xi} needs a branch point, got " + xi.str());
  if (j > s) throw ArgumentError("point " + xi.str() + " lies in a stratum above level " + std::to_string(s));
  SymbolicDivisor d = fiber(xi, s);
  d -= ipow(ell(), j) * fiber(pivot(), s);
  return d;
}

std::int64_t DivisorLattice::u_value(const BasePoint& xi) const {
  const int j = stratum(xi);
  if (xi.kind != BasePoint::Kind::Root || j >= n()) throw ArgumentError("u is defined on branch points only");
  return model_.places()[xi.place].exponent / ipow(ell(), j);
}

SymbolicDivisor DivisorLattice::r_divisor(int s) const {
  check_level(s);
  if (s < 1) throw ArgumentError("R_s needs s >= 1");
  SymbolicDivisor r(s);
  for (const auto& xi : branch_points_below(s)) r += u_value(xi) * d_divisor(xi, s);
  return r;
}

std::vector<std::pair<BasePoint, SymbolicDivisor>> DivisorLattice::lattice_basis(int s, bool include_level) const {
  check_level(s);
  if (include_level && s == n()) throw ArgumentError("V_s^0 basis needs s < n");
  std::vector<std::pair<BasePoint, SymbolicDivisor>> out;
  for (const auto& xi : branch_points_below(s, include_level)) {
    if (xi == pivot()) continue;
    out.emplace_back(xi, d_divisor(xi, s));
  }
  return out;
}

WsPresentation DivisorLattice::ws_presentation(int s) const {
  check_level(s);
  if (s < 1) throw ArgumentError("W_s needs s >= 1");
  const auto basis = lattice_basis(s);

  std::set<PointLabel> support;
  for (const auto& [xi, d] : basis) {
    for (const auto& [p, c] : d.coeffs()) support.insert(p);
  }
  std::vector<std::string> row_labels;
  for (const auto& [xi, d] : basis) row_labels.push_back("D[" + xi.str() + "]");
  std::vector<std::string> col_labels;
  for (const auto& p : support) col_labels.push_back(p.base.str() + "/" + std::to_string(p.fiber));

  FlMatrix bm(ell(), row_labels, col_labels);
  for (std::size_t r = 0; r < basis.size(); ++r) {
    std::size_t c = 0;
    for (const auto& p : support) bm.set(r, c++, basis[r].second.coeff(p));
  }

  // Read the coordinates of R_s off its coefficient on each fiber (the D
  // basis divisors have disjoint support away from the pivot fiber), then
  // check the decomposition exactly.
  const SymbolicDivisor r = r_divisor(s);
  std::vector<std::int64_t> coords;
  SymbolicDivisor rebuilt(s);
  for (const auto& [xi, d] : basis) {
    const std::int64_t c = r.coeff({xi, s, 0});
    coords.push_back(c);
    rebuilt += c * d;
  }
  if (rebuilt != r) throw std::logic_error("R_s is not in the span of the D basis");

  FlMatrix rel(ell(), {"R"}, row_labels);
  for (std::size_t i = 0; i < coords.size(); ++i) rel.set(0, i, coords[i]);

  const std::int64_t total = static_cast<std::int64_t>(basis.size());
  const std::int64_t dim = total - static_cast<std::int64_t>(rel.rank());
  if (dim != strat_.count_below(s) - 2) {
    throw std::logic_error("dim W_s = " + std::to_string(dim) + " but #S[<s] - 2 = " +
                           std::to_string(strat_.count_below(s) - 2));
  }
  return {s, std::move(bm), std::move(rel), std::move(coords), dim};
}

IntMatrix inclusion_matrix(std::span<const SymbolicDivisor> generators) {
  std::set<PointLabel> support;
  for (const auto& g : generators) {
    if (g.level() != generators.front().level()) throw ArgumentError("generators on different levels");
    for (const auto& [p, c] : g.coeffs()) support.insert(p);
  }
  IntMatrix m;
  for (const auto& g : generators) {
    std::vector<mpz_class> row;
    for (const auto& p : support) row.emplace_back(static_cast<long>(g.coeff(p)));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace supertower

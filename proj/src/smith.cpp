#include "supertower/smith.hpp"

#include <stdexcept>
#include <utility>

#include "supertower/errors.hpp"

namespace supertower {

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  for (std::size_t k = 0; k < m[dst].size(); ++k) m[dst][k] -= q * m[src][k];
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  for (auto& row : m) row[dst] -= q * row[src];
}

void col_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

bool SmithForm::cokernel_torsion_free() const {
  for (const auto& d : elementary_divisors) {
    if (d != 1) return false;
  }
  return true;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix out(a.size(), std::vector<mpz_class>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw ArgumentError("matrix shape mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

SmithForm smith_normal_form(const IntMatrix& A) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows == 0 ? 0 : A[0].size();
  for (const auto& r : A) {
    if (r.size() != cols) throw ArgumentError("ragged integer matrix");
  }
  SmithForm sf{identity(rows), A, identity(cols), {}};
  IntMatrix& D = sf.D;

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows;
      std::size_t pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (D[i][j] != 0 && (pr == rows || abs(D[i][j]) < abs(D[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) break;
      std::swap(D[t], D[pr]);
      std::swap(sf.U[t], sf.U[pr]);
      col_swap(D, t, pc);
      col_swap(sf.V, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D[i][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), D[i][t].get_mpz_t(), D[t][t].get_mpz_t());
        row_axpy(D, i, t, q);
        row_axpy(sf.U, i, t, q);
        clean = clean && D[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D[t][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), D[t][j].get_mpz_t(), D[t][t].get_mpz_t());
        col_axpy(D, j, t, q);
        col_axpy(sf.V, j, t, q);
        clean = clean && D[t][j] == 0;
      }
      if (!clean) continue;
      // Pivot must divide the whole trailing block.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (mpz_divisible_p(D[i][j].get_mpz_t(), D[t][t].get_mpz_t()) == 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      row_axpy(D, t, bad, mpz_class(-1));
      row_axpy(sf.U, t, bad, mpz_class(-1));
    }
    if (D[t][t] == 0) break;
    if (D[t][t] < 0) {
      for (auto& v : D[t]) v = -v;
      for (auto& v : sf.U[t]) v = -v;
    }
    sf.elementary_divisors.push_back(D[t][t]);
  }

  if (rows > 0 && cols > 0 && multiply(multiply(sf.U, A), sf.V) != D) {
    throw std::logic_error("Smith normal form certificate U*A*V = D failed");
  }
  return sf;
}

std::vector<std::vector<mpz_class>> integer_kernel(const IntMatrix& A) {
  if (A.empty()) throw ArgumentError("kernel of an empty matrix");
  const SmithForm sf = smith_normal_form(A);
  const std::size_t cols = A[0].size();
  std::vector<std::vector<mpz_class>> basis;
  for (std::size_t j = sf.rank(); j < cols; ++j) {
    std::vector<mpz_class> v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = sf.V[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace supertower

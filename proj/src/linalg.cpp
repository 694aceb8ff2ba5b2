#include "qtorus/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtorus {

namespace {

TPoly lcm(const TPoly& a, const TPoly& b) {
  const TPoly g = TPoly::gcd(a, b);
  return *(a * b).divide_exact(g);
}

// Scale a row of fractions by the lcm of its denominators.
std::vector<TPoly> clear_row(const RatVector& row) {
  TPoly common(1);
  for (const auto& x : row)
    if (!x.is_polynomial()) common = lcm(common, x.den());
  std::vector<TPoly> out;
  out.reserve(row.size());
  for (const auto& x : row) out.push_back(*(x.num() * common).divide_exact(x.den()));
  return out;
}

// Divide out the gcd of the entries, then the unit part of entry `at`.
std::vector<TPoly> make_primitive(std::vector<TPoly> v, std::size_t at) {
  TPoly g;
  for (const auto& x : v) g = TPoly::gcd(g, x);
  if (g.is_zero()) return v;
  for (auto& x : v) x = *x.divide_exact(g);
  const TPoly& pivot = v[at];
  if (!pivot.is_zero()) {
    const TPoly unit = TPoly::monomial(pivot.leading_coeff(), pivot.low_degree());
    for (auto& x : v) x = *x.divide_exact(unit);
  }
  return v;
}

}  // namespace

EchelonForm fraction_free_echelon(const RatMatrix& A, std::size_t columns) {
  std::vector<std::vector<TPoly>> M;
  M.reserve(A.size());
  for (const auto& row : A) {
    if (row.size() != columns) throw std::invalid_argument("ragged matrix");
    M.push_back(clear_row(row));
  }
  EchelonForm out;
  out.columns = columns;
  TPoly previous(1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < columns && r < M.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < M.size() && M[pivot][col].is_zero()) ++pivot;
    if (pivot == M.size()) continue;
    std::swap(M[r], M[pivot]);
    for (std::size_t i = r + 1; i < M.size(); ++i) {
      for (std::size_t j = col + 1; j < columns; ++j) {
        const TPoly cross = M[r][col] * M[i][j] - M[i][col] * M[r][j];
        auto q = cross.divide_exact(previous);
        if (!q) throw std::logic_error("fraction-free elimination: inexact division");
        M[i][j] = std::move(*q);
      }
      M[i][col] = TPoly();
    }
    previous = M[r][col];
    out.pivots.push_back(col);
    ++r;
  }
  M.resize(r);
  out.rows = std::move(M);
  return out;
}

std::size_t rank(const RatMatrix& A, std::size_t columns) {
  return fraction_free_echelon(A, columns).pivots.size();
}

std::vector<std::vector<TPoly>> nullspace(const RatMatrix& A, std::size_t columns) {
  const EchelonForm E = fraction_free_echelon(A, columns);
  const std::size_t r = E.pivots.size();

  // Reduced row echelon form over Q(t); r x columns is small.
  RatMatrix R(r, RatVector(columns));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < columns; ++j) R[i][j] = TRat(E.rows[i][j]);
  for (std::size_t i = r; i-- > 0;) {
    const TRat inv = R[i][E.pivots[i]].inverse();
    for (auto& x : R[i]) x *= inv;
    for (std::size_t k = 0; k < i; ++k) {
      const TRat f = R[k][E.pivots[i]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < columns; ++j) R[k][j] -= f * R[i][j];
    }
  }

  std::vector<bool> is_pivot(columns, false);
  for (auto p : E.pivots) is_pivot[p] = true;
  std::vector<std::vector<TPoly>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(columns);
    v[free] = TRat(1);
    for (std::size_t i = 0; i < r; ++i) v[E.pivots[i]] = -R[i][free];
    basis.push_back(make_primitive(clear_row(v), free));
  }
  return basis;
}

RatVector span_residual(const std::vector<std::vector<TPoly>>& basis, const std::vector<TPoly>& v) {
  RatMatrix A;
  for (const auto& b : basis) {
    if (b.size() != v.size()) throw std::invalid_argument("span_residual: length mismatch");
    A.emplace_back(b.begin(), b.end());
  }
  RatVector r(v.begin(), v.end());
  if (A.empty()) return r;
  const EchelonForm E = fraction_free_echelon(A, v.size());
  for (std::size_t i = 0; i < E.rows.size(); ++i) {
    const std::size_t piv = E.pivots[i];
    if (r[piv].is_zero()) continue;
    const TRat f = r[piv] / TRat(E.rows[i][piv]);
    for (std::size_t j = piv; j < r.size(); ++j)
      if (!E.rows[i][j].is_zero()) r[j] = r[j] - f * TRat(E.rows[i][j]);
  }
  return r;
}

bool in_span(const std::vector<std::vector<TPoly>>& basis, const std::vector<TPoly>& v) {
  const RatVector r = span_residual(basis, v);
  return std::all_of(r.begin(), r.end(), [](const TRat& x) { return x.is_zero(); });
}

}  // namespace qtorus

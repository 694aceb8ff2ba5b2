// Exact linear algebra over Q(t).
#pragma once

#include <vector>

#include "qtorus/coefficients.hpp"

namespace qtorus {

using RatVector = std::vector<TRat>;
using RatMatrix = std::vector<RatVector>;  // row-major; all rows the same length

/// Row echelon form computed fraction-free (Bareiss) over the Laurent ring,
/// after scaling each row to Laurent-polynomial entries.
struct EchelonForm {
  std::vector<std::vector<TPoly>> rows;  // rank many nonzero rows
  std::vector<std::size_t> pivots;       // pivot column of each row
  std::size_t columns = 0;
};

EchelonForm fraction_free_echelon(const RatMatrix& A, std::size_t columns);

std::size_t rank(const RatMatrix& A, std::size_t columns);

/// Basis of {x : A x = 0}, one vector per free column. Each vector has
/// Laurent-polynomial entries with no common non-unit factor, scaled so the
/// entry at its free column is a polynomial with constant term and leading coefficient 1.
std::vector<std::vector<TPoly>> nullspace(const RatMatrix& A, std::size_t columns);

/// v reduced against the echelon form of `basis`: zero in every pivot column,
/// and zero everywhere iff v lies in the span.
RatVector span_residual(const std::vector<std::vector<TPoly>>& basis, const std::vector<TPoly>& v);

/// True if v lies in the Q(t)-span of the given vectors.
bool in_span(const std::vector<std::vector<TPoly>>& basis, const std::vector<TPoly>& v);

}  // namespace qtorus

// Banded matrices over Laurent polynomials, indexed by the colors c = 0..T of
// the Jones-Wenzl basis {S_c}. Entry (r, c) is the coefficient of S_r in the
// image of S_c, so column c is the image of S_c.
//
// Products and pairings come in two flavors: a serial reference and an
// OpenMP kernel parallel over columns. The two must agree exactly.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qtorus/coefficients.hpp"

namespace qtorus {

class BandOperator {
 public:
  /// Zero operator with the given band half-width on colors 0..truncation.
  BandOperator(std::size_t width, std::size_t truncation);

  static BandOperator identity(std::size_t truncation);

  std::size_t width() const { return width_; }
  std::size_t truncation() const { return truncation_; }

  /// Zero outside the band or outside 0..truncation.
  const TPoly& at(std::size_t row, std::size_t col) const;
  /// Throws std::out_of_range if (row, col) is outside the band.
  void set(std::size_t row, std::size_t col, TPoly value);
  void add_to(std::size_t row, std::size_t col, const TPoly& value);

  /// Largest |row - col| over nonzero entries.
  std::size_t effective_width() const;

  /// Columns 0..truncation - width are exact; the rest may have lost
  /// contributions from colors beyond the truncation.
  std::size_t reliable_columns() const {
    return truncation_ >= width_ ? truncation_ - width_ + 1 : 0;
  }

  /// Entrywise equality on columns 0..cols-1 (all rows).
  bool agrees_on_columns(const BandOperator& other, std::size_t cols) const;

  BandOperator& operator+=(const BandOperator& o);
  BandOperator& operator-=(const BandOperator& o);
  BandOperator& operator*=(const TPoly& c);
  friend BandOperator operator+(BandOperator a, const BandOperator& b) { return a += b; }
  friend BandOperator operator-(BandOperator a, const BandOperator& b) { return a -= b; }
  friend BandOperator operator*(const TPoly& c, BandOperator a) { return a *= c; }
  friend BandOperator operator*(const BandOperator& a, const BandOperator& b);
  friend bool operator==(const BandOperator&, const BandOperator&) = default;

  /// Same entries in a band of at least `width`.
  BandOperator widened(std::size_t width) const;

 private:
  std::size_t index(std::size_t row, std::size_t col) const;

  std::size_t width_;
  std::size_t truncation_;
  std::vector<TPoly> diagonals_;  // (2w+1) x (T+1): entry (c+d, c) at (d+w)*(T+1) + c
};

namespace kernels {

/// True when the library was built with OpenMP.
bool parallel_enabled();

BandOperator multiply_serial(const BandOperator& a, const BandOperator& b);
BandOperator multiply_parallel(const BandOperator& a, const BandOperator& b);

/// out[c] = sum over c' of kappa[c'] * op(c', c), for c = 0..depth.
/// Requires op.truncation() >= depth + op.width() and kappa.size() > depth + op.width().
std::vector<TRat> pair_apply_serial(const BandOperator& op, std::span<const TRat> kappa,
                                    std::size_t depth);
std::vector<TRat> pair_apply_parallel(const BandOperator& op, std::span<const TRat> kappa,
                                      std::size_t depth);

}  // namespace kernels

}  // namespace qtorus

#include "qtorus/band_operator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#ifdef QTORUS_HAVE_OPENMP
#include <omp.h>
#endif

namespace qtorus {

namespace {
const TPoly kZero;

long signed_size(std::size_t n) { return static_cast<long>(n); }
}  // namespace

BandOperator::BandOperator(std::size_t width, std::size_t truncation)
    : width_(width), truncation_(truncation), diagonals_((2 * width + 1) * (truncation + 1)) {}

BandOperator BandOperator::identity(std::size_t truncation) {
  BandOperator id(0, truncation);
  for (std::size_t c = 0; c <= truncation; ++c) id.set(c, c, TPoly(1));
  return id;
}

std::size_t BandOperator::index(std::size_t row, std::size_t col) const {
  const long d = signed_size(row) - signed_size(col);
  return static_cast<std::size_t>(d + signed_size(width_)) * (truncation_ + 1) + col;
}

const TPoly& BandOperator::at(std::size_t row, std::size_t col) const {
  if (row > truncation_ || col > truncation_) return kZero;
  const std::size_t gap = row > col ? row - col : col - row;
  if (gap > width_) return kZero;
  return diagonals_[index(row, col)];
}

void BandOperator::set(std::size_t row, std::size_t col, TPoly value) {
  const std::size_t gap = row > col ? row - col : col - row;
  if (row > truncation_ || col > truncation_ || gap > width_)
    throw std::out_of_range("band entry (" + std::to_string(row) + "," + std::to_string(col) +
                            ") outside width " + std::to_string(width_));
  diagonals_[index(row, col)] = std::move(value);
}

void BandOperator::add_to(std::size_t row, std::size_t col, const TPoly& value) {
  const std::size_t gap = row > col ? row - col : col - row;
  if (row > truncation_ || col > truncation_ || gap > width_)
    throw std::out_of_range("band entry outside operator");
  diagonals_[index(row, col)] += value;
}

std::size_t BandOperator::effective_width() const {
  std::size_t w = 0;
  for (std::size_t c = 0; c <= truncation_; ++c)
    for (std::size_t r = c > width_ ? c - width_ : 0; r <= std::min(truncation_, c + width_); ++r)
      if (!at(r, c).is_zero()) w = std::max(w, r > c ? r - c : c - r);
  return w;
}

bool BandOperator::agrees_on_columns(const BandOperator& other, std::size_t cols) const {
  const std::size_t w = std::max(width_, other.width_);
  const std::size_t top = std::max(truncation_, other.truncation_);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = c > w ? c - w : 0; r <= std::min(top, c + w); ++r)
      if (!(at(r, c) == other.at(r, c))) return false;
  return true;
}

BandOperator BandOperator::widened(std::size_t width) const {
  if (width <= width_) return *this;
  BandOperator out(width, truncation_);
  for (std::size_t c = 0; c <= truncation_; ++c)
    for (std::size_t r = c > width_ ? c - width_ : 0; r <= std::min(truncation_, c + width_); ++r)
      out.set(r, c, at(r, c));
  return out;
}

BandOperator& BandOperator::operator+=(const BandOperator& o) {
  if (o.truncation_ != truncation_) throw std::invalid_argument("truncation mismatch");
  if (o.width_ > width_) *this = widened(o.width_);
  for (std::size_t c = 0; c <= truncation_; ++c)
    for (std::size_t r = c > o.width_ ? c - o.width_ : 0; r <= std::min(truncation_, c + o.width_); ++r)
      if (!o.at(r, c).is_zero()) diagonals_[index(r, c)] += o.at(r, c);
  return *this;
}

BandOperator& BandOperator::operator-=(const BandOperator& o) {
  BandOperator neg = o;
  neg *= TPoly(-1);
  return *this += neg;
}

BandOperator& BandOperator::operator*=(const TPoly& c) {
  for (auto& e : diagonals_)
    if (!e.is_zero()) e *= c;
  return *this;
}

BandOperator operator*(const BandOperator& a, const BandOperator& b) {
  return kernels::parallel_enabled() ? kernels::multiply_parallel(a, b)
                                     : kernels::multiply_serial(a, b);
}

namespace kernels {

bool parallel_enabled() {
#ifdef QTORUS_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

namespace {

void check_compatible(const BandOperator& a, const BandOperator& b) {
  if (a.truncation() != b.truncation()) throw std::invalid_argument("truncation mismatch");
}

// Column c of a*b. Columns are independent, which is what the parallel kernel exploits.
void multiply_column(const BandOperator& a, const BandOperator& b, BandOperator& out,
                     std::size_t c) {
  const std::size_t T = a.truncation();
  const std::size_t lo = c > b.width() ? c - b.width() : 0;
  const std::size_t hi = std::min(T, c + b.width());
  for (std::size_t k = lo; k <= hi; ++k) {
    const TPoly& bk = b.at(k, c);
    if (bk.is_zero()) continue;
    const std::size_t rlo = k > a.width() ? k - a.width() : 0;
    const std::size_t rhi = std::min(T, k + a.width());
    for (std::size_t r = rlo; r <= rhi; ++r) {
      const TPoly& ar = a.at(r, k);
      if (!ar.is_zero()) out.add_to(r, c, ar * bk);
    }
  }
}

void check_pairing(const BandOperator& op, std::span<const TRat> kappa, std::size_t depth) {
  if (op.truncation() < depth + op.width())
    throw std::invalid_argument("pair_apply: operator truncation " +
                                std::to_string(op.truncation()) + " < depth " +
                                std::to_string(depth) + " + width " + std::to_string(op.width()));
  if (kappa.size() <= depth + op.width())
    throw std::invalid_argument("pair_apply: kappa sequence has " + std::to_string(kappa.size()) +
                                " entries, need " + std::to_string(depth + op.width() + 1));
}

TRat pair_column(const BandOperator& op, std::span<const TRat> kappa, std::size_t c) {
  TRat sum;
  const std::size_t lo = c > op.width() ? c - op.width() : 0;
  for (std::size_t r = lo; r <= c + op.width(); ++r) {
    const TPoly& e = op.at(r, c);
    if (!e.is_zero()) sum += kappa[r] * TRat(e);
  }
  return sum;
}

}  // namespace

BandOperator multiply_serial(const BandOperator& a, const BandOperator& b) {
  check_compatible(a, b);
  BandOperator out(a.width() + b.width(), a.truncation());
  for (std::size_t c = 0; c <= a.truncation(); ++c) multiply_column(a, b, out, c);
  return out;
}

BandOperator multiply_parallel(const BandOperator& a, const BandOperator& b) {
  check_compatible(a, b);
  BandOperator out(a.width() + b.width(), a.truncation());
  const long n = static_cast<long>(a.truncation()) + 1;
#pragma omp parallel for schedule(dynamic, 4)
  for (long c = 0; c < n; ++c) multiply_column(a, b, out, static_cast<std::size_t>(c));
  return out;
}

std::vector<TRat> pair_apply_serial(const BandOperator& op, std::span<const TRat> kappa,
                                    std::size_t depth) {
  check_pairing(op, kappa, depth);
  std::vector<TRat> out(depth + 1);
  for (std::size_t c = 0; c <= depth; ++c) out[c] = pair_column(op, kappa, c);
  return out;
}

std::vector<TRat> pair_apply_parallel(const BandOperator& op, std::span<const TRat> kappa,
                                      std::size_t depth) {
  check_pairing(op, kappa, depth);
  std::vector<TRat> out(depth + 1);
  const long n = static_cast<long>(depth) + 1;
#pragma omp parallel for schedule(dynamic, 4)
  for (long c = 0; c < n; ++c) out[static_cast<std::size_t>(c)] = pair_column(op, kappa, static_cast<std::size_t>(c));
  return out;
}

}  // namespace kernels

}  // namespace qtorus

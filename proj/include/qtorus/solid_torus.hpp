// Action of the torus skein algebra on the skein module of the solid torus,
// in the Jones-Wenzl basis {S_c}, and the colored-bracket functional Z(K).
//
// The meridian L(0,1) acts diagonally and the core-parallel curve L(1,0)
// acts by S_c -> S_{c+1} + S_{c-1}. The matrix map M is multiplicative for
// the quantum-torus product: M(qt_mul(a, b)) = M(a) M(b). Pairing with a
// kappa vector uses the transpose, which reverses the order and makes the
// dual action multiplicative for skein_mul.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtorus/band_operator.hpp"
#include "qtorus/linalg.hpp"
#include "qtorus/skein_torus.hpp"

namespace qtorus {

/// Colored Kauffman brackets kappa(K, c) for c = 0..size-1.
struct ZSeq {
  enum class Source { Builtin, File };

  std::string knot;
  Exponent framing = 0;
  Source source = Source::Builtin;
  std::vector<TRat> kappa;

  std::size_t size() const { return kappa.size(); }
  bool is_degenerate() const;
};

/// L(0,q) = e_{0,q} + e_{0,-q}: eigenvalue (-1)^q (t^{2q(c+1)} + t^{-2q(c+1)}) on S_c.
BandOperator op_diag_power(Exponent q, std::size_t truncation);

/// L(1,0): S_c -> S_{c+1} + S_{c-1}, with S_{-1} = 0.
BandOperator op_core(std::size_t truncation);

/// Matrix of a canonical curve L(p,q), width p. Built from op_core and
/// op_diag_power by the product-to-sum recursion
///   M(p,q) = t^-q [ M(1,0) M(p-1,q) - t^-q M(p-2,q) ],  p >= 2,
/// with M(1,q) solved from M(1,0) M(0,q) and M(0,q) M(1,0).
BandOperator op_curve(CurveIndex c, std::size_t truncation);

/// Linear extension of op_curve over the curve basis; e_{0,0} acts as the identity.
BandOperator op_of_skein(const SkeinElement& s, std::size_t truncation);

/// Largest |p| over the support: the band width of op_of_skein(s).
std::size_t skein_width(const SkeinElement& s);

/// kappa(c) = (-1)^c (t^{2(c+1)} - t^{-2(c+1)}) / (t^2 - t^-2) for c = 0..max_color.
ZSeq z_unknot(std::size_t max_color);

/// c -> sum over c' of kappa(c') op(c', c), for c = 0..depth.
/// Throws std::invalid_argument if the operator or the sequence is too short.
std::vector<TRat> pair_apply(const BandOperator& op, const ZSeq& z, std::size_t depth);

/// Candidate annihilators found by the bounded search.
struct AnnihilatorSearch {
  std::vector<std::optional<CurveIndex>> unknowns;  // nullopt is the constant term
  std::vector<std::vector<TPoly>> nullspace;         // coordinates in `unknowns`
  std::vector<SkeinElement> elements;                // the same vectors as skeins
  std::size_t depth = 0;                             // verified for colors 0..depth

  /// Coordinates of s in `unknowns`, or nullopt if s has support outside them.
  std::optional<std::vector<TPoly>> coordinates(const SkeinElement& s) const;
  /// True if s lies in the Q(t)-span of the nullspace.
  bool contains(const SkeinElement& s) const;
};

/// Exact nullspace over Q(t) of the pairings of 1 and every canonical curve
/// L(p,q) with |p| <= pmax, |q| <= qmax against z, for colors 0..depth.
/// Throws std::invalid_argument for a degenerate (all-zero) z or a short z.
AnnihilatorSearch annihilator_search(const ZSeq& z, Exponent pmax, Exponent qmax,
                                     std::size_t depth);

}  // namespace qtorus

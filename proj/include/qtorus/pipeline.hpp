// End-to-end A-ideal workflow: peripheral generators -> quantum torus ->
// cleared plane generators -> A-basis, plus the t = -1 bridge and the
// orthogonality check against colored brackets.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtorus/classical.hpp"
#include "qtorus/quantum_plane.hpp"
#include "qtorus/solid_torus.hpp"

namespace qtorus {

struct KnotData {
  std::string name;
  std::vector<std::string> peripheral_gens;  // skein expressions
  /// Curve that bounds in the complement-side solid torus: (1,0) or (0,1).
  CurveIndex bounding_curve{0, 1};
  std::optional<ZSeq> kappa;
};

/// The unknot as set up for the A-basis computation: L(0,1) bounds, with
/// kernel generators L(0,1) + t^2 + t^-2 and L(1,1) + t^-3 L(1,0).
KnotData unknot_knot_data(bool with_kappa = true, std::size_t max_color = 0);

struct ABasisResult {
  GroebnerBasis<TRat> basis;
  std::vector<SymPlanePoly> cleared;  // generator images after clear_to_plane
  std::vector<Shift> shifts;
  CurveIndex convention{0, 1};
  bool t_symbolic = true;
};

/// Throws std::invalid_argument for no generators or an all-zero generator set,
/// and ParseError for a malformed expression.
ABasisResult peripheral_to_abasis(const KnotData& k);

/// t -> -1 on every coefficient, then l -> -m, m -> -l; normalized.
std::vector<ClassicalPoly> specialize_and_swap(const ABasisResult& b);
std::vector<ClassicalPoly> specialize_and_swap(const std::vector<SymPlanePoly>& basis);

/// GCD of the inputs with positive leading coefficient. Throws if all are zero.
ClassicalPoly b_polynomial(const std::vector<ClassicalPoly>& ps);

/// Divides out every factor l - 1, normalized. Throws for B = 0.
ClassicalPoly a_polynomial(const ClassicalPoly& B);

/// x^2 + y^2 + z^2 - xyz - 4 vanishes on (l + 1/l, m + 1/m, lm + 1/(lm)).
bool character_cover_check(const Rational& constant = 4);

struct GeneratorReport {
  std::string expression;      // as given
  SkeinElement translated;     // in the pairing convention
  bool pass = false;
  std::optional<std::size_t> first_failure;
  std::vector<std::size_t> failures;
};

struct OrthogonalityReport {
  std::string knot;
  std::size_t depth = 0;
  std::vector<GeneratorReport> generators;
  bool all_pass() const;
};

/// Generators in the pairing convention: when L(0,1) bounds, (p,q) -> (q,p).
SkeinElement translate_for_pairing(const SkeinElement& s, CurveIndex bounding_curve);

/// Highest color verify_orthogonality reads at this depth: depth plus the
/// largest band width among the translated generators.
std::size_t max_color_needed(const KnotData& k, std::size_t depth);

/// Pairs every translated generator with kappa for colors 0..depth.
/// Throws std::invalid_argument if k.kappa is missing or too short.
OrthogonalityReport verify_orthogonality(const KnotData& k, std::size_t depth);

}  // namespace qtorus

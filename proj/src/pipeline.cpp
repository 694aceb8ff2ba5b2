#include "qtorus/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtorus {

KnotData unknot_knot_data(bool with_kappa, std::size_t max_color) {
  KnotData k;
  k.name = "unknot";
  k.peripheral_gens = {"L(0,1) + t^2 + t^-2", "L(1,1) + t^-3*L(1,0)"};
  k.bounding_curve = CurveIndex(0, 1);
  if (with_kappa) k.kappa = z_unknot(max_color);
  return k;
}

ABasisResult peripheral_to_abasis(const KnotData& k) {
  if (k.peripheral_gens.empty()) throw std::invalid_argument("knot has no peripheral generators");
  ABasisResult out;
  out.convention = k.bounding_curve;
  for (const auto& text : k.peripheral_gens) {
    const SkeinElement s = parse_skein(text);
    if (s.is_zero()) continue;
    ClearedPoly c = clear_to_plane(s.value());
    out.cleared.push_back(c.poly);
    out.shifts.push_back(c.shift);
  }
  if (out.cleared.empty()) throw std::invalid_argument("all peripheral generators are zero");
  out.basis = saturate_monomials(out.cleared);
  return out;
}

std::vector<ClassicalPoly> specialize_and_swap(const std::vector<SymPlanePoly>& basis) {
  std::vector<ClassicalPoly> out;
  for (const auto& f : basis)
    out.push_back(ClassicalPoly::from_plane(specialize(f, Rational(-1))).swap_negate().normalized());
  return out;
}

std::vector<ClassicalPoly> specialize_and_swap(const ABasisResult& b) {
  return specialize_and_swap(b.basis.polys);
}

ClassicalPoly b_polynomial(const std::vector<ClassicalPoly>& ps) { return classical_gcd(ps); }

ClassicalPoly a_polynomial(const ClassicalPoly& B) {
  if (B.is_zero()) throw std::invalid_argument("a_polynomial of zero");
  ClassicalPoly A = B;
  while (auto q = divide_by_l_minus_one(A)) A = *q;
  return A.normalized();
}

bool character_cover_check(const Rational& constant) {
  return character_relation_image(constant).is_zero();
}

bool OrthogonalityReport::all_pass() const {
  return std::all_of(generators.begin(), generators.end(),
                     [](const GeneratorReport& g) { return g.pass; });
}

SkeinElement translate_for_pairing(const SkeinElement& s, CurveIndex bounding_curve) {
  const CurveIndex b = bounding_curve.canonical();
  if (b == CurveIndex(0, 1)) return swap_cycles(s);
  if (b == CurveIndex(1, 0)) return s;
  throw std::invalid_argument("bounding curve must be (1,0) or (0,1)");
}

std::size_t max_color_needed(const KnotData& k, std::size_t depth) {
  std::size_t w = 0;
  for (const auto& text : k.peripheral_gens)
    w = std::max(w, skein_width(translate_for_pairing(parse_skein(text), k.bounding_curve)));
  return depth + w;
}

OrthogonalityReport verify_orthogonality(const KnotData& k, std::size_t depth) {
  if (!k.kappa) throw std::invalid_argument("knot '" + k.name + "' has no kappa sequence");
  OrthogonalityReport report;
  report.knot = k.name;
  report.depth = depth;
  for (const auto& text : k.peripheral_gens) {
    GeneratorReport g;
    g.expression = text;
    g.translated = translate_for_pairing(parse_skein(text), k.bounding_curve);
    const std::size_t w = skein_width(g.translated);
    const BandOperator op = op_of_skein(g.translated, depth + w);
    const std::vector<TRat> paired = pair_apply(op, *k.kappa, depth);
    for (std::size_t c = 0; c < paired.size(); ++c)
      if (!paired[c].is_zero()) g.failures.push_back(c);
    g.pass = g.failures.empty();
    if (!g.pass) g.first_failure = g.failures.front();
    report.generators.push_back(std::move(g));
  }
  return report;
}

}  // namespace qtorus

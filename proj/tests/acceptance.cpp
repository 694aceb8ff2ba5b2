// Acceptance suite: one PASS/FAIL line per criterion, with its runtime limit.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "support.hpp"
#include "qtorus/io.hpp"
#include "qtorus/pipeline.hpp"

using namespace qtorus;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

SymPlanePoly term(const TPoly& c, Exponent p, Exponent q) { return SymPlanePoly::monomial(TRat(c), {p, q}); }

const TPoly s2 = TPoly::t(2) + TPoly::t(-2);

SymPlanePoly basis1() { return term(TPoly(1), 0, 2) + term(s2, 0, 1) + term(TPoly(1), 0, 0); }
SymPlanePoly basis2() {
  return term(TPoly(1), 2, 1) + term(TPoly::t(-2), 2, 0) - term(TPoly(1), 0, 1) - term(TPoly::t(2), 0, 0);
}
SymPlanePoly cleared2() {
  return term(TPoly::t(-3), 2, 2) + term(TPoly::t(-5), 2, 1) + term(TPoly::t(-1), 0, 1) + term(TPoly::t(1), 0, 0);
}

Outcome unknot_abasis() {
  Outcome o;
  const ABasisResult r = peripheral_to_abasis(unknot_knot_data(false));
  o.require(r.basis.polys.size() == 2, "basis has " + std::to_string(r.basis.polys.size()) + " elements");
  if (!o.ok) return o;
  o.require(r.basis.polys[0] == basis1(), "first element is " + r.basis.polys[0].to_string());
  o.require(r.basis.polys[1] == basis2(), "second element is " + r.basis.polys[1].to_string());
  for (const auto& f : r.basis.polys) o.require(f.leading_coeff() == TRat(1), "not monic: " + f.to_string());
  o.require(r.basis.polys[0].leading_pp() < r.basis.polys[1].leading_pp(), "not sorted");
  o.detail = o.ok ? "{" + r.basis.polys[0].to_string() + ", " + r.basis.polys[1].to_string() + "}" : o.detail;
  return o;
}

Outcome contracted_generators() {
  Outcome o;
  const ClearedPoly a = clear_to_plane(parse_skein("L(0,1) + t^2 + t^-2").value());
  const ClearedPoly b = clear_to_plane(parse_skein("L(1,1) + t^-3*L(1,0)").value());
  o.require(a.poly == basis1(), "first cleared generator is " + a.poly.to_string());
  o.require(b.poly == cleared2(), "second cleared generator is " + b.poly.to_string());
  o.require(a.shift == Shift{0, 1} && b.shift == Shift{1, 1}, "unexpected shifts");
  if (o.ok) o.detail = a.poly.to_string() + "; " + b.poly.to_string();
  return o;
}

Outcome relators() {
  Outcome o;
  const auto rel = bp_relators(Stacking::Standard);
  const auto names = bp_relator_names();
  for (std::size_t i = 0; i < rel.size(); ++i) o.require(rel[i].is_zero(), names[i] + " = " + rel[i].to_string());
  const auto flipped = bp_relators(Stacking::Flipped);
  const QTElement expected =
      (TPoly::t(2) - TPoly::t(-2)) * (phat_curve(CurveIndex(1, -1)).value() - phat_curve(CurveIndex(1, 1)).value());
  o.require(!flipped[1].is_zero(), "flipped stacking gives zero");
  o.require(flipped[1] == expected, "flipped relator 2 is " + flipped[1].to_string());
  if (o.ok) o.detail = "4 relators vanish; flipped order leaves (t^2 - t^-2)(L(1,-1) - L(1,1))";
  return o;
}

Outcome orthogonality() {
  Outcome o;
  const std::size_t depth = 200;
  KnotData k = unknot_knot_data(false);
  k.kappa = z_unknot(max_color_needed(k, depth));
  const OrthogonalityReport rep = verify_orthogonality(k, depth);
  for (const auto& g : rep.generators)
    o.require(g.pass, g.translated.to_string() + " fails at c = " + std::to_string(g.first_failure.value_or(0)));
  if (o.ok) o.detail = std::to_string(rep.generators.size()) + " generators annihilate kappa for c <= 200";
  return o;
}

Outcome formal_ideal() {
  Outcome o;
  const std::size_t depth = 20;
  const AnnihilatorSearch s = annihilator_search(z_unknot(depth + 1), 1, 1, depth);
  const KnotData k = unknot_knot_data(false);
  for (const auto& text : k.peripheral_gens) {
    const SkeinElement g = translate_for_pairing(parse_skein(text), k.bounding_curve);
    const auto coords = s.coordinates(g);
    o.require(coords.has_value(), g.to_string() + " has support outside the search space");
    if (!coords) continue;
    const RatVector r = span_residual(s.nullspace, *coords);
    const bool zero = std::all_of(r.begin(), r.end(), [](const TRat& x) { return x.is_zero(); });
    o.require(zero, g.to_string() + " leaves a nonzero residual");
  }
  if (o.ok) o.detail = "nullspace dimension " + std::to_string(s.nullspace.size()) + " contains both translated generators";
  return o;
}

Outcome classical_bridge() {
  Outcome o;
  const auto specialized = specialize_and_swap(peripheral_to_abasis(unknot_knot_data(false)));
  const ClassicalPoly B = b_polynomial(specialized);
  const ClassicalPoly A = a_polynomial(B);
  o.require(B == ClassicalPoly::l() - ClassicalPoly(1L), "B = " + B.to_string());
  o.require(A == ClassicalPoly(1L), "A = " + A.to_string());
  o.require(character_cover_check(), "character relation does not vanish");
  if (o.ok) o.detail = "B = " + B.to_string() + ", A = " + A.to_string() + ", cover relation vanishes";
  return o;
}

std::vector<SymPlanePoly> scramble(testing::Rng& r, std::vector<SymPlanePoly> gens) {
  const PlaneRing<TRat> ring;
  for (auto& g : gens) g *= TRat(TPoly::monomial(testing::rat(r.nonzero(-5, 5), r.range(1, 4)), r.range(-4, 4)));
  for (int k = 0; k < 3; ++k) {
    const auto i = static_cast<std::size_t>(r.range(0, static_cast<long>(gens.size()) - 1));
    const auto j = static_cast<std::size_t>(r.range(0, static_cast<long>(gens.size()) - 1));
    if (i != j) gens[i] += plane_mul(ring, testing::random_plane(r, 2, 1), gens[j]);
  }
  for (std::size_t i = gens.size(); i > 1; --i)
    std::swap(gens[i - 1], gens[static_cast<std::size_t>(r.range(0, static_cast<long>(i) - 1))]);
  return gens;
}

Outcome groebner_suite() {
  Outcome o;
  testing::Rng r(2024);
  std::vector<std::vector<SymPlanePoly>> ideals = {{basis1(), cleared2()}};
  while (ideals.size() < 5) {
    std::vector<SymPlanePoly> gens = {testing::random_plane(r, 3, 2), testing::random_plane(r, 2, 2)};
    if (!gens[0].is_zero() && !gens[1].is_zero()) ideals.push_back(gens);
  }
  for (std::size_t n = 0; n < ideals.size(); ++n) {
    const auto& gens = ideals[n];
    const std::string tag = "ideal " + std::to_string(n) + ": ";
    const auto gb = buchberger(gens);
    for (const auto& g : gens) o.require(reduce(g, gb.polys).is_zero(), tag + "a generator does not reduce to 0");
    for (std::size_t i = 0; i < gb.polys.size(); ++i)
      for (std::size_t j = i + 1; j < gb.polys.size(); ++j)
        o.require(reduce(s_polynomial(gb.polys[i], gb.polys[j]), gb.polys).is_zero(),
                  tag + "an S-polynomial does not reduce to 0");
    for (int k = 0; k < 20; ++k) o.require(buchberger(scramble(r, gens)) == gb, tag + "scrambled input changes the basis");
    o.require(buchberger(gb.polys) == gb, tag + "not idempotent");

    std::vector<NumPlanePoly> num;
    std::vector<testing::commutative::Poly> ref;
    for (const auto& g : gens) {
      num.push_back(specialize(g, -1));
      ref.push_back(testing::commutative::from_num(num.back()));
    }
    const auto at_minus_one = buchberger(PlaneRing<Rational>{Rational(-1)}, num);
    const auto expected = testing::commutative::groebner(ref);
    bool same = at_minus_one.polys.size() == expected.size();
    for (std::size_t i = 0; same && i < expected.size(); ++i)
      same = testing::commutative::from_num(at_minus_one.polys[i]) == expected[i];
    o.require(same, tag + "t = -1 basis differs from the commutative reference");
  }
  if (o.ok) o.detail = std::to_string(ideals.size()) + " ideals, 20 scramblings each";
  return o;
}

Outcome external_inputs() {
  Outcome o;
  // Only the unknot has published peripheral generators. Other knots enter as
  // files; their bases and polynomials carry no claim here.
  const auto dir = std::filesystem::temp_directory_path() / "qtorus_acceptance";
  std::filesystem::create_directories(dir);
  ZSeq z;
  z.knot = "external";
  z.source = ZSeq::Source::File;
  for (int c = 0; c < 8; ++c) z.kappa.emplace_back(TPoly::t(c) + TPoly(1));
  std::ofstream(dir / "ext.kappa") << io::write_kappa(z);
  KnotData k;
  k.name = "external";
  k.peripheral_gens = {"L(1,0) - t^4*L(0,1)", "L(2,1) + 3"};
  std::ofstream(dir / "ext.knot") << io::write_knot(k, "ext.kappa");
  const KnotData back = io::load_knot(dir / "ext.knot", 0);
  o.require(back.kappa && back.kappa->kappa == z.kappa, "kappa file not read back");
  o.require(!peripheral_to_abasis(back).basis.polys.empty(), "external generators not accepted");
  o.require(verify_orthogonality(back, 3).generators.size() == 2, "external kappa not paired");
  std::filesystem::remove_all(dir);
  if (o.ok) o.detail = "external knot and kappa files accepted; no claims made about nontrivial knots";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "unknot A-basis", 1, unknot_abasis},
      {2, "contracted generators", 1, contracted_generators},
      {3, "presentation relators", 1, relators},
      {4, "orthogonality to depth 200", 30, orthogonality},
      {5, "formal ideal recovery", 60, formal_ideal},
      {6, "classical bridge", 1, classical_bridge},
      {7, "Groebner property suite", 60, groebner_suite},
      {8, "external inputs, no claims", 60, external_inputs},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs >= c.limit) {
      o.ok = false;
      o.detail = "over the " + std::to_string(static_cast<int>(c.limit)) + " s limit";
    }
    if (!o.ok) ++failed;
    std::ostringstream time;
    time << std::fixed << std::setprecision(3) << secs << " s";
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << "  " << c.name << "  [" << time.str()
              << "]  " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}

// qtorus: command-line front end for the A-ideal pipeline.
//
// Exit codes: 0 success or PASS, 1 FAIL, 2 input error, 3 internal error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qtorus/io.hpp"
#include "qtorus/pipeline.hpp"

namespace fs = std::filesystem;
using namespace qtorus;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io::InputError(path + ": cannot open for writing");
  out << text;
}

template <class Coeff>
void print_basis(const GroebnerBasis<Coeff>& gb) {
  for (const auto& f : gb.polys) std::cout << f.to_string() << "\n";
}

int cmd_gb(const std::string& ideal, bool t_minus_one, const std::string& out) {
  const auto gens = io::ideal_generators(io::load_ideal(ideal));
  if (gens.empty() || std::all_of(gens.begin(), gens.end(), [](const auto& f) { return f.is_zero(); }))
    throw io::InputError(ideal + ": /polys: ideal has no nonzero generator");
  if (t_minus_one) {
    std::vector<NumPlanePoly> num;
    for (const auto& f : gens) num.push_back(specialize(f, Rational(-1)));
    print_basis(buchberger(PlaneRing<Rational>{Rational(-1)}, num));
    return kOk;
  }
  const auto gb = buchberger(gens);
  print_basis(gb);
  write_out(out, io::write_ideal(gb.polys));
  return kOk;
}

int cmd_abasis(const std::string& knot, const std::string& out) {
  const ABasisResult r = peripheral_to_abasis(io::load_knot(knot, 0));
  print_basis(r.basis);
  write_out(out, io::write_ideal(r.basis.polys));
  return kOk;
}

std::vector<SymPlanePoly> load_basis(const std::string& path) {
  auto polys = io::ideal_generators(io::load_ideal(path));
  std::erase_if(polys, [](const SymPlanePoly& f) { return f.is_zero(); });
  if (polys.empty()) throw io::InputError(path + ": /polys: basis has no nonzero polynomial");
  return polys;
}

int cmd_specialize(const std::string& basis) {
  for (const auto& c : specialize_and_swap(load_basis(basis))) std::cout << c.to_string() << "\n";
  return kOk;
}

int cmd_apoly(const std::string& basis) {
  const ClassicalPoly B = b_polynomial(specialize_and_swap(load_basis(basis)));
  std::cout << "B = " << B.to_string() << "  (principal closure, not radical)\n";
  std::cout << "A = " << a_polynomial(B).to_string() << "\n";
  return kOk;
}

int cmd_verify(const std::string& knot, std::size_t depth) {
  KnotData k = io::load_knot(knot, 0);
  if (!k.kappa) throw io::InputError(knot + ": /kappa: verify needs a kappa sequence");
  if (k.kappa->source == ZSeq::Source::Builtin) k.kappa = z_unknot(max_color_needed(k, depth));
  const std::size_t need = max_color_needed(k, depth) + 1;
  if (k.kappa->size() < need)
    throw io::InputError(knot + ": /kappa: sequence has " + std::to_string(k.kappa->size()) +
                         " colors, depth " + std::to_string(depth) + " needs " + std::to_string(need));

  const OrthogonalityReport rep = verify_orthogonality(k, depth);
  std::cout << "knot: " << rep.knot << "\n";
  std::cout << "depth: " << rep.depth << "\n";
  for (std::size_t i = 0; i < rep.generators.size(); ++i) {
    const GeneratorReport& g = rep.generators[i];
    std::cout << "generator " << i + 1 << ": " << g.expression << " -> " << g.translated.to_string() << ": ";
    if (g.pass) {
      std::cout << "PASS through c = " << depth << "\n";
      continue;
    }
    std::cout << "FAIL at c = " << *g.first_failure << " (nonzero at";
    for (std::size_t c : g.failures) std::cout << ' ' << c;
    std::cout << ")\n";
  }
  std::cout << "result: " << (rep.all_pass() ? "PASS" : "FAIL") << "\n";
  return rep.all_pass() ? kOk : kFail;
}

int cmd_annihilate(const std::string& kappa, Exponent pmax, Exponent qmax, std::size_t depth) {
  const ZSeq z = kappa.empty() ? z_unknot(depth + static_cast<std::size_t>(pmax)) : io::load_kappa(kappa);
  if (z.size() <= depth + static_cast<std::size_t>(pmax))
    throw io::InputError(kappa + ": /kappa: sequence too short for depth " + std::to_string(depth) +
                         " and pmax " + std::to_string(pmax));
  const AnnihilatorSearch s = annihilator_search(z, pmax, qmax, depth);
  std::cout << "knot: " << z.knot << "\n";
  std::cout << "unknowns: " << s.unknowns.size() << "\n";
  std::cout << "depth: " << s.depth << "\n";
  std::cout << "nullspace dimension: " << s.elements.size() << "\n";
  for (const auto& e : s.elements) std::cout << e.to_string() << "\n";
  return kOk;
}

int cmd_relators() {
  for (const auto& r : bp_relators()) std::cout << r.to_string() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncommutative A-ideals from peripheral generators"};
  app.require_subcommand(1);

  std::string ideal, knot, basis, kappa, out;
  bool t_minus_one = false;
  std::size_t depth = 0;
  Exponent pmax = 1, qmax = 1;

  auto* gb = app.add_subcommand("gb", "Minimal reduced Groebner basis of a left ideal");
  gb->add_option("--ideal", ideal, "Ideal file")->required()->check(CLI::ExistingFile);
  gb->add_flag("--t-minus-one", t_minus_one, "Specialize at t = -1 first (commutative case)");
  gb->add_option("--out", out, "Write the basis as an ideal file");

  auto* abasis = app.add_subcommand("abasis", "A-basis of a knot from its peripheral generators");
  abasis->add_option("--knot", knot, "Knot file")->required()->check(CLI::ExistingFile);
  abasis->add_option("--out", out, "Write the basis as an ideal file");

  auto* spec = app.add_subcommand("specialize", "t = -1 and l -> -m, m -> -l on a basis");
  spec->add_option("--basis", basis, "Ideal file")->required()->check(CLI::ExistingFile);

  auto* apoly = app.add_subcommand("apoly", "B- and A-polynomial from a basis");
  apoly->add_option("--basis", basis, "Ideal file")->required()->check(CLI::ExistingFile);

  auto* verify = app.add_subcommand("verify", "Pair peripheral generators with colored brackets");
  verify->add_option("--knot", knot, "Knot file")->required()->check(CLI::ExistingFile);
  verify->add_option("--depth", depth, "Highest color checked")->required();

  auto* annihilate = app.add_subcommand("annihilate", "Bounded search for annihilators of kappa");
  annihilate->add_option("--kappa", kappa, "Kappa file (default: builtin unknot)")->check(CLI::ExistingFile);
  annihilate->add_option("--pmax", pmax, "Largest |p|")->check(CLI::NonNegativeNumber);
  annihilate->add_option("--qmax", qmax, "Largest |q|")->check(CLI::NonNegativeNumber);
  annihilate->add_option("--depth", depth, "Highest color used")->required();

  auto* relators = app.add_subcommand("relators", "Residuals of the four presentation relators");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*gb) return cmd_gb(ideal, t_minus_one, out);
    if (*abasis) return cmd_abasis(knot, out);
    if (*spec) return cmd_specialize(basis);
    if (*apoly) return cmd_apoly(basis);
    if (*verify) return cmd_verify(knot, depth);
    if (*annihilate) return cmd_annihilate(kappa, pmax, qmax, depth);
    if (*relators) return cmd_relators();
  } catch (const io::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}

// Plain-text JSON formats for ideals, kappa sequences and knot data.
//
// TPoly:   [[exp, num, den], ...]; num/den are integers or decimal strings.
// Ideal:   {"basis": "monomial" | "e",
//           "polys": [{"terms": [{"p": 0, "q": 2, "coeff": TPoly,
//                                 "coeff_den": TPoly (optional)}]}]}
// Kappa:   {"knot": "...", "framing": 0, "kappa": [{"c": 0, "num": TPoly, "den": TPoly}]}
// Knot:    {"name": "...", "bounding_curve": [0, 1], "generators": ["..."],
//           "kappa": "builtin:unknot" | "relative/path.kappa" (optional)}
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtorus/pipeline.hpp"
#include "qtorus/quantum_plane.hpp"
#include "qtorus/quantum_torus.hpp"
#include "qtorus/solid_torus.hpp"

namespace qtorus::io {

/// Malformed input; the message names the file and the position (JSON path,
/// line/column, or expression column).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class IdealBasis { Monomial, E };

struct IdealFile {
  IdealBasis basis = IdealBasis::Monomial;
  std::vector<SymPlanePoly> plane;  // basis == Monomial
  std::vector<QTElement> torus;     // basis == E
};

std::string write_tpoly(const TPoly& p);  // compact JSON text

IdealFile parse_ideal(const std::string& text, const std::string& origin = "<string>");
std::string write_ideal(const std::vector<SymPlanePoly>& polys);
std::string write_ideal(const std::vector<QTElement>& elems);

/// Plane generators of an ideal file. E-basis records are cleared to the plane.
std::vector<SymPlanePoly> ideal_generators(const IdealFile& f);

ZSeq parse_kappa(const std::string& text, const std::string& origin = "<string>");
std::string write_kappa(const ZSeq& z);

/// kappa references resolve relative to base_dir; "builtin:unknot" yields
/// z_unknot(builtin_colors).
KnotData parse_knot(const std::string& text, const std::filesystem::path& base_dir,
                    std::size_t builtin_colors, const std::string& origin = "<string>");
std::string write_knot(const KnotData& k, const std::string& kappa_ref);

std::string read_file(const std::filesystem::path& path);
IdealFile load_ideal(const std::filesystem::path& path);
ZSeq load_kappa(const std::filesystem::path& path);
KnotData load_knot(const std::filesystem::path& path, std::size_t builtin_colors);

}  // namespace qtorus::io

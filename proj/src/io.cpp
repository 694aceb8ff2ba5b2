#include "qtorus/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qtorus::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& where, const std::string& msg) {
  throw InputError(origin + ": " + where + ": " + msg);
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based; recover line and column from it.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(origin + ": line " + std::to_string(line) + ", column " + std::to_string(col) +
                     ": invalid JSON (" + e.what() + ")");
  }
}

const json& field(const json& obj, const char* key, const std::string& path, const std::string& origin) {
  if (!obj.is_object()) fail(origin, path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(origin, path, std::string("missing field '") + key + "'");
  return *it;
}

mpz_class read_integer(const json& j, const std::string& path, const std::string& origin) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) fail(origin, path, "not an integer string");
    return z;
  }
  fail(origin, path, "expected an integer");
}

Exponent read_exponent(const json& j, const std::string& path, const std::string& origin) {
  if (!j.is_number_integer()) fail(origin, path, "expected an integer");
  return j.get<Exponent>();
}

TPoly read_tpoly(const json& j, const std::string& path, const std::string& origin) {
  if (!j.is_array()) fail(origin, path, "expected a list of [exp, num, den] triples");
  std::vector<std::pair<Exponent, Rational>> raw;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    const json& tri = j[i];
    if (!tri.is_array() || tri.size() != 3) fail(origin, p, "expected [exp, num, den]");
    const Exponent e = read_exponent(tri[0], p + "/0", origin);
    const mpz_class num = read_integer(tri[1], p + "/1", origin);
    const mpz_class den = read_integer(tri[2], p + "/2", origin);
    if (den == 0) fail(origin, p + "/2", "zero denominator");
    Rational c(num, den);
    c.canonicalize();
    raw.emplace_back(e, c);
  }
  return TPoly::normalize(raw);
}

json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

json tpoly_json(const TPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back(json::array({e, integer_json(c.get_num()), integer_json(c.get_den())}));
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const char* basis_name(IdealBasis b) { return b == IdealBasis::E ? "e" : "monomial"; }

}  // namespace

std::string write_tpoly(const TPoly& p) { return tpoly_json(p).dump(); }

IdealFile parse_ideal(const std::string& text, const std::string& origin) {
  const json root = parse_json(text, origin);
  IdealFile out;
  const json& b = field(root, "basis", "", origin);
  if (b == "monomial") out.basis = IdealBasis::Monomial;
  else if (b == "e") out.basis = IdealBasis::E;
  else fail(origin, "/basis", "expected \"monomial\" or \"e\"");

  const json& polys = field(root, "polys", "", origin);
  if (!polys.is_array()) fail(origin, "/polys", "expected a list");
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const std::string pp = "/polys/" + std::to_string(i);
    const json& terms = field(polys[i], "terms", pp, origin);
    if (!terms.is_array()) fail(origin, pp + "/terms", "expected a list");
    std::vector<std::pair<PowerProduct, TRat>> raw;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const std::string tp = pp + "/terms/" + std::to_string(k);
      const Exponent p = read_exponent(field(terms[k], "p", tp, origin), tp + "/p", origin);
      const Exponent q = read_exponent(field(terms[k], "q", tp, origin), tp + "/q", origin);
      const TPoly num = read_tpoly(field(terms[k], "coeff", tp, origin), tp + "/coeff", origin);
      TPoly den(1);
      if (terms[k].contains("coeff_den")) {
        den = read_tpoly(terms[k]["coeff_den"], tp + "/coeff_den", origin);
        if (den.is_zero()) fail(origin, tp + "/coeff_den", "zero denominator");
      }
      raw.emplace_back(PowerProduct{p, q}, TRat(num, den));
    }
    if (out.basis == IdealBasis::Monomial) {
      try {
        out.plane.push_back(SymPlanePoly::normalize(raw));
      } catch (const std::invalid_argument& e) {
        fail(origin, pp, e.what());
      }
    } else {
      QTElement x;
      for (const auto& [pq, c] : raw) {
        if (c.den() != TPoly(1))
          fail(origin, pp, "e-basis coefficients must be Laurent polynomials");
        x += QTElement::basis(pq.p, pq.q, c.num());
      }
      out.torus.push_back(std::move(x));
    }
  }
  return out;
}

namespace {

// One term per line; terms listed from the leading power product down.
std::string ideal_text(IdealBasis basis, const std::vector<std::vector<ordered_json>>& polys) {
  std::string s = "{\n  \"basis\": \"" + std::string(basis_name(basis)) + "\",\n  \"polys\": [";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    s += i ? ",\n" : "\n";
    s += "    {\"terms\": [";
    for (std::size_t k = 0; k < polys[i].size(); ++k) {
      s += k ? ",\n" : "\n";
      s += "      " + polys[i][k].dump();
    }
    s += "\n    ]}";
  }
  s += polys.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return s;
}

}  // namespace

std::string write_ideal(const std::vector<SymPlanePoly>& polys) {
  std::vector<std::vector<ordered_json>> out;
  for (const auto& f : polys) {
    std::vector<ordered_json> terms;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
      const auto& [pp, c] = *it;
      ordered_json t = {{"p", pp.p}, {"q", pp.q}, {"coeff", tpoly_json(c.num())}};
      if (c.den() != TPoly(1)) t["coeff_den"] = tpoly_json(c.den());
      terms.push_back(std::move(t));
    }
    out.push_back(std::move(terms));
  }
  return ideal_text(IdealBasis::Monomial, out);
}

std::string write_ideal(const std::vector<QTElement>& elems) {
  std::vector<std::vector<ordered_json>> out;
  for (const auto& x : elems) {
    std::vector<ordered_json> terms;
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
      terms.push_back(ordered_json{{"p", it->first.p}, {"q", it->first.q}, {"coeff", tpoly_json(it->second)}});
    out.push_back(std::move(terms));
  }
  return ideal_text(IdealBasis::E, out);
}

std::vector<SymPlanePoly> ideal_generators(const IdealFile& f) {
  if (f.basis == IdealBasis::Monomial) return f.plane;
  std::vector<SymPlanePoly> out;
  for (const auto& x : f.torus)
    if (!x.is_zero()) out.push_back(clear_to_plane(x).poly);
  return out;
}

ZSeq parse_kappa(const std::string& text, const std::string& origin) {
  const json root = parse_json(text, origin);
  ZSeq z;
  z.source = ZSeq::Source::File;
  const json& knot = field(root, "knot", "", origin);
  if (!knot.is_string()) fail(origin, "/knot", "expected a string");
  z.knot = knot.get<std::string>();
  z.framing = read_exponent(field(root, "framing", "", origin), "/framing", origin);
  const json& kappa = field(root, "kappa", "", origin);
  if (!kappa.is_array()) fail(origin, "/kappa", "expected a list");
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    const std::string p = "/kappa/" + std::to_string(i);
    const Exponent c = read_exponent(field(kappa[i], "c", p, origin), p + "/c", origin);
    if (c != static_cast<Exponent>(i))
      fail(origin, p + "/c", "expected c = " + std::to_string(i) + " (records must be consecutive from 0)");
    const TPoly num = read_tpoly(field(kappa[i], "num", p, origin), p + "/num", origin);
    TPoly den(1);
    if (kappa[i].contains("den")) den = read_tpoly(kappa[i]["den"], p + "/den", origin);
    if (den.is_zero()) fail(origin, p + "/den", "zero denominator");
    z.kappa.emplace_back(num, den);
  }
  if (z.kappa.empty()) fail(origin, "/kappa", "empty sequence");
  return z;
}

std::string write_kappa(const ZSeq& z) {
  std::string s = "{\n  \"knot\": " + json(z.knot).dump() + ",\n  \"framing\": " +
                  std::to_string(z.framing) + ",\n  \"kappa\": [";
  for (std::size_t c = 0; c < z.kappa.size(); ++c) {
    const ordered_json rec = {{"c", c}, {"num", tpoly_json(z.kappa[c].num())}, {"den", tpoly_json(z.kappa[c].den())}};
    s += c ? ",\n    " : "\n    ";
    s += rec.dump();
  }
  s += z.kappa.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return s;
}

KnotData parse_knot(const std::string& text, const std::filesystem::path& base_dir,
                    std::size_t builtin_colors, const std::string& origin) {
  const json root = parse_json(text, origin);
  KnotData k;
  const json& name = field(root, "name", "", origin);
  if (!name.is_string()) fail(origin, "/name", "expected a string");
  k.name = name.get<std::string>();

  const json& bc = field(root, "bounding_curve", "", origin);
  if (!bc.is_array() || bc.size() != 2) fail(origin, "/bounding_curve", "expected [p, q]");
  const Exponent bp = read_exponent(bc[0], "/bounding_curve/0", origin);
  const Exponent bq = read_exponent(bc[1], "/bounding_curve/1", origin);
  if (!((bp == 1 && bq == 0) || (bp == 0 && bq == 1)))
    fail(origin, "/bounding_curve", "must be [1, 0] or [0, 1]");
  k.bounding_curve = CurveIndex(bp, bq);

  const json& gens = field(root, "generators", "", origin);
  if (!gens.is_array() || gens.empty()) fail(origin, "/generators", "expected a nonempty list");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string p = "/generators/" + std::to_string(i);
    if (!gens[i].is_string()) fail(origin, p, "expected a skein expression string");
    const std::string expr = gens[i].get<std::string>();
    try {
      (void)parse_skein(expr);
    } catch (const ParseError& e) {
      fail(origin, p, e.what());
    } catch (const std::exception& e) {
      fail(origin, p, e.what());
    }
    k.peripheral_gens.push_back(expr);
  }

  if (root.contains("kappa")) {
    const json& ref = root["kappa"];
    if (!ref.is_string()) fail(origin, "/kappa", "expected a string");
    const std::string r = ref.get<std::string>();
    if (r == "builtin:unknot") {
      k.kappa = z_unknot(builtin_colors);
    } else {
      k.kappa = load_kappa(base_dir / r);
    }
  }
  return k;
}

std::string write_knot(const KnotData& k, const std::string& kappa_ref) {
  json j = {{"name", k.name},
            {"bounding_curve", json::array({k.bounding_curve.p(), k.bounding_curve.q()})},
            {"generators", k.peripheral_gens}};
  if (!kappa_ref.empty()) j["kappa"] = kappa_ref;
  return dump(j);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

IdealFile load_ideal(const std::filesystem::path& path) {
  return parse_ideal(read_file(path), path.string());
}

ZSeq load_kappa(const std::filesystem::path& path) {
  return parse_kappa(read_file(path), path.string());
}

KnotData load_knot(const std::filesystem::path& path, std::size_t builtin_colors) {
  return parse_knot(read_file(path), path.parent_path(), builtin_colors, path.string());
}

}  // namespace qtorus::io

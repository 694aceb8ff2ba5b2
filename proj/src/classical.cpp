#include "qtorus/classical.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qtorus {

ClassicalPoly::ClassicalPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(PowerProduct{0, 0}, c);
}

ClassicalPoly ClassicalPoly::monomial(const Rational& c, Exponent p, Exponent q) {
  ClassicalPoly f;
  if (sgn(c) != 0) f.terms_.emplace(PowerProduct{p, q}, c);
  return f;
}

ClassicalPoly ClassicalPoly::from_plane(const NumPlanePoly& f) {
  ClassicalPoly out;
  for (const auto& [pp, c] : f.terms()) out.terms_.emplace(pp, c);
  return out;
}

bool ClassicalPoly::has_negative_exponents() const {
  for (const auto& [pp, c] : terms_)
    if (pp.p < 0 || pp.q < 0) return true;
  return false;
}

ClassicalPoly& ClassicalPoly::operator+=(const ClassicalPoly& o) {
  for (const auto& [pp, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(pp, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

ClassicalPoly& ClassicalPoly::operator-=(const ClassicalPoly& o) { return *this += -o; }

ClassicalPoly operator*(const ClassicalPoly& a, const ClassicalPoly& b) {
  ClassicalPoly out;
  for (const auto& [pa, ca] : a.terms_)
    for (const auto& [pb, cb] : b.terms_)
      out += ClassicalPoly::monomial(ca * cb, exp_add(pa.p, pb.p), exp_add(pa.q, pb.q));
  return out;
}

ClassicalPoly ClassicalPoly::operator-() const {
  ClassicalPoly r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

Rational ClassicalPoly::evaluate(const Rational& l, const Rational& m) const {
  Rational sum = 0;
  for (const auto& [pp, c] : terms_) sum += c * rational_pow(l, pp.p) * rational_pow(m, pp.q);
  return sum;
}

ClassicalPoly ClassicalPoly::normalized() const {
  if (is_zero()) return *this;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& [pp, c] : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (sgn(terms_.rbegin()->second) < 0) factor = -factor;
  ClassicalPoly r = *this;
  for (auto& kv : r.terms_) kv.second *= factor;
  return r;
}

ClassicalPoly ClassicalPoly::swap_negate() const {
  ClassicalPoly out;
  for (const auto& [pp, c] : terms_) {
    const bool odd = ((pp.p + pp.q) % 2) != 0;
    out += monomial(odd ? Rational(-c) : c, pp.q, pp.p);
  }
  return out;
}

std::string ClassicalPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [pp, c] = *it;
    const bool neg = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string vars;
    auto var = [&vars](const char* name, Exponent e) {
      if (e == 0) return;
      if (!vars.empty()) vars += '*';
      vars += name;
      if (e != 1) vars += "^" + std::to_string(e);
    };
    var("l", pp.p);
    var("m", pp.q);
    if (vars.empty()) os << mag.get_str();
    else if (mag == 1) os << vars;
    else os << mag.get_str() << '*' << vars;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- gcd

namespace {

// Polynomial in l with coefficients in Q[m]; index = l-degree.
using LPoly = std::vector<dense::UPoly>;

void trim(LPoly& f) {
  while (!f.empty() && dense::is_zero(f.back())) f.pop_back();
}

LPoly to_lpoly(const ClassicalPoly& f) {
  if (f.has_negative_exponents())
    throw std::invalid_argument("polynomial has negative exponents: " + f.to_string());
  LPoly out;
  for (const auto& [pp, c] : f.terms()) {
    const auto i = static_cast<std::size_t>(pp.p), j = static_cast<std::size_t>(pp.q);
    if (out.size() <= i) out.resize(i + 1);
    if (out[i].size() <= j) out[i].resize(j + 1, Rational(0));
    out[i][j] += c;
  }
  for (auto& u : out) dense::trim(u);
  trim(out);
  return out;
}

ClassicalPoly from_lpoly(const LPoly& f) {
  ClassicalPoly out;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f[i].size(); ++j)
      out += ClassicalPoly::monomial(f[i][j], static_cast<Exponent>(i), static_cast<Exponent>(j));
  return out;
}

dense::UPoly content(const LPoly& f) {
  dense::UPoly g;
  for (const auto& c : f) g = dense::gcd(g, c);
  return g;
}

LPoly divide_coeffs(const LPoly& f, const dense::UPoly& d) {
  LPoly out;
  for (const auto& c : f) out.push_back(dense::divmod(c, d).first);
  trim(out);
  return out;
}

LPoly primitive(const LPoly& f) {
  if (f.empty()) return f;
  return divide_coeffs(f, content(f));
}

// Sparse pseudo-remainder: repeatedly cancel the top l-degree.
LPoly pseudo_remainder(LPoly f, const LPoly& g) {
  const dense::UPoly& lg = g.back();
  while (!f.empty() && f.size() >= g.size()) {
    const dense::UPoly lf = f.back();
    const std::size_t shift = f.size() - g.size();
    for (auto& c : f) c = dense::mul(c, lg);
    for (std::size_t i = 0; i < g.size(); ++i)
      f[i + shift] = dense::sub(f[i + shift], dense::mul(lf, g[i]));
    trim(f);
  }
  return f;
}

LPoly lpoly_gcd(LPoly f, LPoly g) {
  if (f.empty()) return g;
  if (g.empty()) return f;
  const dense::UPoly c = dense::gcd(content(f), content(g));
  f = primitive(f);
  g = primitive(g);
  if (f.size() < g.size()) std::swap(f, g);
  while (!g.empty()) {
    LPoly r = pseudo_remainder(f, g);
    f = std::move(g);
    g = primitive(r);
  }
  f = primitive(f);
  for (auto& coeff : f) coeff = dense::mul(coeff, c);
  trim(f);
  return f;
}

}  // namespace

ClassicalPoly classical_gcd(const std::vector<ClassicalPoly>& ps) {
  LPoly g;
  bool any = false;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    g = any ? lpoly_gcd(g, to_lpoly(p)) : to_lpoly(p);
    any = true;
  }
  if (!any) throw std::invalid_argument("gcd of zero polynomials");
  return from_lpoly(g).normalized();
}

std::optional<ClassicalPoly> divide_by_l_minus_one(const ClassicalPoly& f) {
  const LPoly a = to_lpoly(f);
  if (a.empty()) return ClassicalPoly();
  dense::UPoly at_one;
  for (const auto& c : a) at_one = dense::add(at_one, c);
  if (!dense::is_zero(at_one)) return std::nullopt;
  LPoly q(a.size() - 1);
  dense::UPoly carry;
  for (std::size_t k = a.size(); k-- > 1;) {
    carry = dense::add(carry, a[k]);
    q[k - 1] = carry;
  }
  return from_lpoly(q);
}

ClassicalPoly character_relation_image(const Rational& constant) {
  const ClassicalPoly x = ClassicalPoly::monomial(1, 1, 0) + ClassicalPoly::monomial(1, -1, 0);
  const ClassicalPoly y = ClassicalPoly::monomial(1, 0, 1) + ClassicalPoly::monomial(1, 0, -1);
  const ClassicalPoly z = ClassicalPoly::monomial(1, 1, 1) + ClassicalPoly::monomial(1, -1, -1);
  return x * x + y * y + z * z - x * y * z - ClassicalPoly(constant);
}

}  // namespace qtorus

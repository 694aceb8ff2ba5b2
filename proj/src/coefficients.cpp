#include "qtorus/coefficients.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qtorus {

Exponent exp_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("t-exponent overflow");
  return r;
}

Exponent exp_mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("t-exponent overflow");
  return r;
}

Rational rational_pow(const Rational& base, Exponent k) {
  if (k < 0 && sgn(base) == 0) throw std::domain_error("negative power of zero");
  const unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r = k < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- TPoly

TPoly::TPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(0, c);
}

TPoly TPoly::normalize(const std::vector<std::pair<Exponent, Rational>>& raw) {
  TPoly p;
  for (const auto& [k, c] : raw) {
    auto [it, inserted] = p.terms_.emplace(k, c);
    if (!inserted) it->second += c;
    if (sgn(it->second) == 0) p.terms_.erase(it);
  }
  return p;
}

TPoly TPoly::monomial(const Rational& c, Exponent k) {
  TPoly p;
  if (sgn(c) != 0) p.terms_.emplace(k, c);
  return p;
}

bool TPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Rational TPoly::coeff(Exponent k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(k, -c);
    if (!inserted) {
      it->second -= c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  if (b.is_monomial()) {
    const auto& [kb, cb] = *b.terms_.begin();
    for (const auto& [ka, ca] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), exp_add(ka, kb), ca * cb);
    return r;
  }
  if (a.is_monomial()) return b * a;
  Rational prod;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      prod = ca * cb;
      auto [it, inserted] = r.terms_.emplace(exp_add(ka, kb), prod);
      if (!inserted) it->second += prod;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
  return r;
}

TPoly& TPoly::operator*=(const TPoly& o) { return *this = *this * o; }

TPoly& TPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& kv : terms_) kv.second *= c;
  }
  return *this;
}

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

TPoly TPoly::shifted(Exponent k) const {
  if (k == 0) return *this;
  TPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), exp_add(e, k), c);
  return r;
}

TPoly TPoly::inverted() const {
  TPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

Rational TPoly::specialize(const Rational& t0) const {
  if (sgn(t0) == 0) throw std::domain_error("cannot specialize a Laurent polynomial at t = 0");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c * rational_pow(t0, e);
  return sum;
}

namespace {

// Dense coefficients of p * t^-low_degree(p).
dense::UPoly to_dense(const TPoly& p) {
  dense::UPoly d;
  if (p.is_zero()) return d;
  const Exponent low = p.low_degree();
  d.assign(static_cast<std::size_t>(p.degree() - low + 1), Rational(0));
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - low)] = c;
  return d;
}

TPoly from_dense(const dense::UPoly& d, Exponent shift) {
  std::vector<std::pair<Exponent, Rational>> raw;
  raw.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    if (sgn(d[i]) != 0) raw.emplace_back(exp_add(static_cast<Exponent>(i), shift), d[i]);
  return TPoly::normalize(raw);
}

}  // namespace

std::optional<TPoly> TPoly::divide_exact(const TPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  if (is_zero()) return TPoly();
  if (divisor.is_monomial()) {
    const auto& [k, c] = *divisor.terms_.begin();
    TPoly r = shifted(-k);
    r *= Rational(1) / c;
    return r;
  }
  auto [q, r] = dense::divmod(to_dense(*this), to_dense(divisor));
  if (!dense::is_zero(r)) return std::nullopt;
  return from_dense(q, low_degree() - divisor.low_degree());
}

TPoly TPoly::gcd(const TPoly& a, const TPoly& b) {
  if (a.is_zero() && b.is_zero()) return TPoly();
  if (a.is_zero()) return gcd(b, b);
  if (b.is_zero()) return gcd(a, a);
  if (a.is_monomial() || b.is_monomial()) return TPoly(1);
  return from_dense(dense::gcd(to_dense(a), to_dense(b)), 0);
}

namespace {

void append_term(std::ostringstream& os, bool first, const Rational& c, const std::string& var,
                 Exponent e) {
  const bool neg = sgn(c) < 0;
  const Rational mag = abs(c);
  if (first) {
    if (neg) os << '-';
  } else {
    os << (neg ? " - " : " + ");
  }
  if (e == 0) {
    os << mag.get_str();
    return;
  }
  if (mag != 1) os << mag.get_str() << '*';
  os << var;
  if (e != 1) os << '^' << e;
}

}  // namespace

std::string TPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    append_term(os, first, it->second, "t", it->first);
    first = false;
  }
  return os.str();
}

TPoly tp_mul(const TPoly& a, const TPoly& b) { return a * b; }
Rational tp_specialize(const TPoly& p, const Rational& t0) { return p.specialize(t0); }

std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------- TRat

TRat::TRat(const TPoly& num, const TPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  canonicalize();
}

void TRat::canonicalize() {
  if (num_.is_zero()) {
    den_ = TPoly(1);
    return;
  }
  if (den_.is_one()) return;
  if (den_.is_monomial()) {
    num_ = *num_.divide_exact(den_);
    den_ = TPoly(1);
    return;
  }
  const TPoly g = TPoly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
  }
  const Exponent low = den_.low_degree();
  const Rational lead = den_.leading_coeff();
  num_ = num_.shifted(-low);
  den_ = den_.shifted(-low);
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

TRat& TRat::operator+=(const TRat& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) canonicalize();
    else if (num_.is_zero()) den_ = TPoly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

TRat& TRat::operator-=(const TRat& o) { return *this += -o; }

TRat& TRat::operator*=(const TRat& o) {
  num_ = num_ * o.num_;
  if (num_.is_zero()) {
    den_ = TPoly(1);
    return *this;
  }
  if (den_.is_one() && o.den_.is_one()) return *this;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

TRat TRat::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of zero rational function");
  return TRat(den_, num_);
}

TRat& TRat::operator/=(const TRat& o) { return *this *= o.inverse(); }

TRat TRat::operator-() const {
  TRat r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational TRat::specialize(const Rational& t0) const {
  const Rational d = den_.specialize(t0);
  if (sgn(d) == 0) throw std::domain_error("rational function has a pole at the specialization point");
  return num_.specialize(t0) / d;
}

std::string TRat::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const TRat& r) { return os << r.to_string(); }

// ---------------------------------------------------------------- dense

namespace dense {

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

bool is_zero(const UPoly& p) {
  for (const auto& c : p)
    if (sgn(c) != 0) return false;
  return true;
}

long degree(const UPoly& p) {
  for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
    if (sgn(p[static_cast<std::size_t>(i)]) != 0) return i;
  return -1;
}

UPoly add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (is_zero(a) || is_zero(b)) return {};
  UPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UPoly scale(const UPoly& a, const Rational& c) {
  if (sgn(c) == 0) return {};
  UPoly r = a;
  for (auto& x : r) x *= c;
  trim(r);
  return r;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  const long db = degree(b);
  if (db < 0) throw std::domain_error("polynomial division by zero");
  UPoly r = a;
  trim(r);
  const long da = degree(r);
  if (da < db) return {UPoly{}, r};
  UPoly q(static_cast<std::size_t>(da - db + 1), Rational(0));
  const Rational inv_lead = Rational(1) / b[static_cast<std::size_t>(db)];
  for (long k = da; k >= db; --k) {
    const Rational c = r[static_cast<std::size_t>(k)] * inv_lead;
    if (sgn(c) == 0) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  trim(q);
  trim(r);
  return {q, r};
}

namespace {

using ZPoly = std::vector<mpz_class>;

// Primitive integer multiple of a nonzero rational polynomial.
ZPoly primitive(const UPoly& a) {
  mpz_class den = 1;
  for (const auto& c : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  z.reserve(a.size());
  mpz_class content = 0;
  for (const auto& c : a) {
    z.push_back(c.get_num() * (den / c.get_den()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.back().get_mpz_t());
  }
  if (content != 1)
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return z;
}

void make_primitive(ZPoly& z) {
  mpz_class content = 0;
  for (const auto& c : z) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content == 1) return;
  }
  for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
}

// Pseudo-remainder of a by b, reduced to its primitive part.
ZPoly primitive_prem(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lead = b.back();
  while (a.size() > db) {
    const mpz_class g = gcd(a.back(), lead);
    const mpz_class fa = lead / g, fb = a.back() / g;
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= fa;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= fb * b[j];
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
  }
  make_primitive(a);
  return a;
}

}  // namespace

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  trim(x);
  trim(y);
  if (x.empty() || y.empty()) {
    UPoly r = x.empty() ? y : x;
    return r.empty() ? r : scale(r, Rational(1) / r.back());
  }
  if (x.size() == 1 || y.size() == 1) return {Rational(1)};
  ZPoly u = primitive(x), v = primitive(y);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    if (v.size() == 1) return {Rational(1)};
    ZPoly r = primitive_prem(std::move(u), v);
    u = std::move(v);
    v = std::move(r);
  }
  UPoly out;
  out.reserve(u.size());
  for (const auto& c : u) out.emplace_back(Rational(c, u.back()));
  for (auto& c : out) c.canonicalize();
  return out;
}

}  // namespace dense

}  // namespace qtorus

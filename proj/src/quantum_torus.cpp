#include "qtorus/quantum_torus.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qtorus {

QTElement::QTElement(const TPoly& c) {
  if (!c.is_zero()) terms_.emplace(PowerProduct{0, 0}, c);
}

QTElement QTElement::basis(Exponent p, Exponent q, const TPoly& c) {
  return normalize({{PowerProduct{p, q}, c}});
}

QTElement QTElement::normalize(const std::vector<std::pair<PowerProduct, TPoly>>& raw) {
  QTElement x;
  for (const auto& [pq, c] : raw) {
    auto [it, inserted] = x.terms_.emplace(pq, c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) x.terms_.erase(it);
  }
  return x;
}

QTElement QTElement::from_monomials(const Terms& monomial_terms) {
  std::vector<std::pair<PowerProduct, TPoly>> raw;
  for (const auto& [pq, c] : monomial_terms) raw.emplace_back(pq, c.shifted(exp_mul(pq.p, pq.q)));
  return normalize(raw);
}

QTElement::Terms QTElement::to_monomials() const {
  Terms out;
  for (const auto& [pq, c] : terms_) out.emplace(pq, c.shifted(-exp_mul(pq.p, pq.q)));
  return out;
}

TPoly QTElement::coeff(PowerProduct pq) const {
  auto it = terms_.find(pq);
  return it == terms_.end() ? TPoly() : it->second;
}

QTElement& QTElement::operator+=(const QTElement& o) {
  for (const auto& [pq, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(pq, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

QTElement& QTElement::operator-=(const QTElement& o) { return *this += -o; }

QTElement& QTElement::operator*=(const TPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

QTElement QTElement::operator-() const {
  QTElement r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

std::string QTElement::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [pq, c] = *it;
    const bool simple = c.is_monomial();
    const bool negative = simple && sgn(c.leading_coeff()) < 0;
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << '-';
    const TPoly mag = negative ? -c : c;
    if (!mag.is_one()) os << (simple ? mag.to_string() : "(" + mag.to_string() + ")") << '*';
    os << "e(" << pq.p << ',' << pq.q << ')';
    first = false;
  }
  return os.str();
}

QTElement qt_mul(const QTElement& x, const QTElement& y) {
  std::vector<std::pair<PowerProduct, TPoly>> raw;
  raw.reserve(x.terms().size() * y.terms().size());
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      const Exponent det = exp_add(exp_mul(a.p, b.q), -exp_mul(a.q, b.p));
      raw.emplace_back(PowerProduct{exp_add(a.p, b.p), exp_add(a.q, b.q)}, (ca * cb).shifted(det));
    }
  }
  return QTElement::normalize(raw);
}

QTElement qt_theta(const QTElement& x) {
  std::vector<std::pair<PowerProduct, TPoly>> raw;
  for (const auto& [pq, c] : x.terms()) raw.emplace_back(PowerProduct{-pq.p, -pq.q}, c);
  return QTElement::normalize(raw);
}

QTElement qt_monomial(Exponent a, Exponent b) {
  return QTElement::basis(a, b, TPoly::t(exp_mul(a, b)));
}

ClearedPoly clear_to_plane(const QTElement& x) {
  if (x.is_zero()) throw std::invalid_argument("clear_to_plane: zero element");
  Exponent min_p = 0, min_q = 0;
  for (const auto& [pq, c] : x.terms()) {
    min_p = std::min(min_p, pq.p);
    min_q = std::min(min_q, pq.q);
  }
  const Shift shift{-min_p, -min_q};
  const QTElement cleared = qt_mul(qt_monomial(shift.a, shift.b), x);
  std::vector<std::pair<PowerProduct, TRat>> raw;
  for (const auto& [pq, c] : cleared.to_monomials()) raw.emplace_back(pq, TRat(c));
  return {SymPlanePoly::normalize(raw), shift};
}

QTElement from_plane(const SymPlanePoly& f) {
  QTElement::Terms mono;
  for (const auto& [pp, c] : f.terms()) {
    if (!c.is_polynomial())
      throw std::invalid_argument("from_plane: coefficient " + c.to_string() +
                                  " is not a Laurent polynomial");
    mono.emplace(pp, c.num());
  }
  return QTElement::from_monomials(mono);
}

}  // namespace qtorus

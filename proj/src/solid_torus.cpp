#include "qtorus/solid_torus.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qtorus {

bool ZSeq::is_degenerate() const {
  return std::all_of(kappa.begin(), kappa.end(), [](const TRat& k) { return k.is_zero(); });
}

BandOperator op_diag_power(Exponent q, std::size_t truncation) {
  if (q < 1) throw std::invalid_argument("op_diag_power needs q >= 1");
  BandOperator d(0, truncation);
  const Rational sign = (q % 2 == 0) ? 1 : -1;
  for (std::size_t c = 0; c <= truncation; ++c) {
    const Exponent k = exp_mul(exp_mul(2, q), static_cast<Exponent>(c) + 1);
    d.set(c, c, TPoly::monomial(sign, k) + TPoly::monomial(sign, -k));
  }
  return d;
}

BandOperator op_core(std::size_t truncation) {
  BandOperator u(1, truncation);
  for (std::size_t c = 0; c <= truncation; ++c) {
    if (c + 1 <= truncation) u.set(c + 1, c, TPoly(1));
    if (c >= 1) u.set(c - 1, c, TPoly(1));
  }
  return u;
}

namespace {

// Matrices of canonical curves at one truncation, memoized across the recursion.
class CurveTable {
 public:
  explicit CurveTable(std::size_t truncation) : truncation_(truncation) {}

  const BandOperator& get(Exponent p, Exponent q) {
    const PowerProduct key{p, q};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    BandOperator m = build(p, q);
    return cache_.emplace(key, std::move(m)).first->second;
  }

 private:
  // L(0,q) for any q, including the degenerate e_{0,0} + e_{0,0} = 2.
  BandOperator meridian_power(Exponent q) {
    if (q == 0) return TPoly(2) * BandOperator::identity(truncation_);
    return op_diag_power(q < 0 ? -q : q, truncation_);
  }

  BandOperator build(Exponent p, Exponent q) {
    if (p == 0) return meridian_power(q);
    const BandOperator& core = get_core();
    if (p == 1) {
      if (q == 0) return core;
      // L10 L0q = t^q L1q + t^-q L1,-q and L0q L10 = t^-q L1q + t^q L1,-q.
      const BandOperator diag = meridian_power(q);
      BandOperator numer = TPoly::t(q) * (core * diag) - TPoly::t(-q) * (diag * core);
      const TPoly spread = TPoly::t(exp_mul(2, q)) - TPoly::t(exp_mul(-2, q));
      BandOperator out(1, truncation_);
      for (std::size_t c = 0; c <= truncation_; ++c) {
        for (std::size_t r = c > 1 ? c - 1 : 0; r <= std::min(truncation_, c + 1); ++r) {
          const TPoly& e = numer.at(r, c);
          if (e.is_zero()) continue;
          auto quotient = e.divide_exact(spread);
          if (!quotient) throw std::logic_error("op_curve: inexact division building L(1,q)");
          out.set(r, c, std::move(*quotient));
        }
      }
      return out;
    }
    const BandOperator lower = p == 2 ? meridian_power(q) : BandOperator(get(p - 2, q));
    BandOperator out = core * get(p - 1, q) - TPoly::t(-q) * lower.widened(static_cast<std::size_t>(p));
    out *= TPoly::t(-q);
    return out;
  }

  const BandOperator& get_core() {
    if (!core_) core_ = op_core(truncation_);
    return *core_;
  }

  std::size_t truncation_;
  std::optional<BandOperator> core_;
  std::map<PowerProduct, BandOperator> cache_;
};

}  // namespace

BandOperator op_curve(CurveIndex c, std::size_t truncation) {
  const CurveIndex k = c.canonical();
  CurveTable table(truncation);
  return table.get(k.p(), k.q());
}

std::size_t skein_width(const SkeinElement& s) {
  Exponent w = 0;
  for (const auto& [pq, c] : s.value().terms()) w = std::max(w, pq.p < 0 ? -pq.p : pq.p);
  return static_cast<std::size_t>(w);
}

BandOperator op_of_skein(const SkeinElement& s, std::size_t truncation) {
  const std::size_t w = skein_width(s);
  BandOperator out(w, truncation);
  CurveTable table(truncation);
  for (const auto& [pq, c] : s.value().terms()) {
    if (pq.p == 0 && pq.q == 0) {
      out += c * BandOperator::identity(truncation);
      continue;
    }
    if (!CurveIndex(pq.p, pq.q).is_canonical()) continue;  // Theta partner of a canonical term
    out += c * table.get(pq.p, pq.q);
  }
  return out;
}

ZSeq z_unknot(std::size_t max_color) {
  ZSeq z;
  z.knot = "unknot";
  z.framing = 0;
  z.source = ZSeq::Source::Builtin;
  z.kappa.reserve(max_color + 1);
  for (std::size_t c = 0; c <= max_color; ++c) {
    const Exponent ce = static_cast<Exponent>(c);
    const Rational sign = (c % 2 == 0) ? 1 : -1;
    std::vector<std::pair<Exponent, Rational>> raw;
    for (Exponent j = 0; j <= ce; ++j) raw.emplace_back(2 * ce - 4 * j, sign);
    z.kappa.emplace_back(TPoly::normalize(raw));
  }
  return z;
}

std::vector<TRat> pair_apply(const BandOperator& op, const ZSeq& z, std::size_t depth) {
  return kernels::parallel_enabled() ? kernels::pair_apply_parallel(op, z.kappa, depth)
                                     : kernels::pair_apply_serial(op, z.kappa, depth);
}

std::optional<std::vector<TPoly>> AnnihilatorSearch::coordinates(const SkeinElement& s) const {
  std::vector<TPoly> v(unknowns.size());
  for (const auto& [pq, c] : s.value().terms()) {
    std::optional<CurveIndex> key;
    if (pq.p != 0 || pq.q != 0) {
      const CurveIndex ci(pq.p, pq.q);
      if (!ci.is_canonical()) continue;
      key = ci;
    }
    auto it = std::find(unknowns.begin(), unknowns.end(), key);
    if (it == unknowns.end()) return std::nullopt;
    v[static_cast<std::size_t>(it - unknowns.begin())] = c;
  }
  return v;
}

bool AnnihilatorSearch::contains(const SkeinElement& s) const {
  const auto v = coordinates(s);
  return v && in_span(nullspace, *v);
}

AnnihilatorSearch annihilator_search(const ZSeq& z, Exponent pmax, Exponent qmax,
                                     std::size_t depth) {
  if (pmax < 0 || qmax < 0) throw std::invalid_argument("degree bounds must be nonnegative");
  if (z.is_degenerate()) throw std::invalid_argument("annihilator_search: kappa sequence is zero");

  AnnihilatorSearch out;
  out.depth = depth;
  out.unknowns.push_back(std::nullopt);
  for (Exponent p = 0; p <= pmax; ++p)
    for (Exponent q = -qmax; q <= qmax; ++q)
      if (p > 0 || q > 0) out.unknowns.emplace_back(CurveIndex(p, q));
  if (depth < out.unknowns.size())
    throw std::invalid_argument("annihilator_search: depth " + std::to_string(depth) +
                                " is smaller than the number of unknowns " +
                                std::to_string(out.unknowns.size()));

  const std::size_t truncation = depth + static_cast<std::size_t>(pmax);
  CurveTable table(truncation);
  RatMatrix A(depth + 1, RatVector(out.unknowns.size()));
  for (std::size_t j = 0; j < out.unknowns.size(); ++j) {
    const auto& u = out.unknowns[j];
    const BandOperator op = u ? table.get(u->p(), u->q()) : BandOperator::identity(truncation);
    const std::vector<TRat> column = pair_apply(op, z, depth);
    for (std::size_t c = 0; c <= depth; ++c) A[c][j] = column[c];
  }

  out.nullspace = nullspace(A, out.unknowns.size());
  for (const auto& v : out.nullspace) {
    SkeinElement s;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero()) continue;
      const auto& u = out.unknowns[j];
      s += u ? v[j] * phat_curve(*u) : SkeinElement(v[j]);
    }
    out.elements.push_back(std::move(s));
  }
  return out;
}

}  // namespace qtorus

#include "resolab/ratfun.hpp"

#include <algorithm>
#include <cmath>

#include "resolab/errors.hpp"

namespace resolab {

namespace {

bool close(cplx a, cplx b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Removes zero/pole pairs within tol; nearest pole wins.
void cancel(std::vector<cplx>& zeros, std::vector<cplx>& poles, double tol) {
  if (zeros.empty() || poles.empty()) return;
  std::vector<bool> pole_used(poles.size(), false);
  std::vector<cplx> kept;
  kept.reserve(zeros.size());
  for (const cplx z : zeros) {
    std::size_t best = poles.size();
    double best_d = 0.0;
    for (std::size_t k = 0; k < poles.size(); ++k) {
      if (pole_used[k] || !close(z, poles[k], tol)) continue;
      const double d = std::abs(z - poles[k]);
      if (best == poles.size() || d < best_d) {
        best = k;
        best_d = d;
      }
    }
    if (best == poles.size()) {
      kept.push_back(z);
    } else {
      pole_used[best] = true;
      if (z != poles[best]) note_near_cancellation(z, poles[best]);
    }
  }
  std::vector<cplx> rest;
  for (std::size_t k = 0; k < poles.size(); ++k)
    if (!pole_used[k]) rest.push_back(poles[k]);
  zeros = std::move(kept);
  poles = std::move(rest);
}

// Splits b against a: which entries of b have a partner in a (consumed), and
// which entries of a were left unmatched.
struct Matching {
  std::vector<cplx> common;
  std::vector<cplx> a_only;
  std::vector<cplx> b_only;
};

Matching match(const std::vector<cplx>& a, const std::vector<cplx>& b, double tol) {
  Matching m;
  std::vector<bool> used(a.size(), false);
  for (const cplx q : b) {
    bool found = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (!used[k] && close(a[k], q, tol)) {
        used[k] = true;
        m.common.push_back(a[k]);
        found = true;
        break;
      }
    }
    if (!found) m.b_only.push_back(q);
  }
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!used[k]) m.a_only.push_back(a[k]);
  return m;
}

template <class V>
V concat(V a, const V& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Numerators of a and b over the common denominator (after pulling out
// common zeros). Used both by add() and coefficient_defect().
struct CommonForm {
  std::vector<cplx> common_zeros;
  std::vector<cplx> den;
  Poly na;
  Poly nb;
};

CommonForm common_form(const RatFun& a, const RatFun& b, double tol) {
  CommonForm f;
  const Matching zm = match(a.zeros(), b.zeros(), tol);
  f.common_zeros = zm.common;
  const Matching pm = match(a.poles(), b.poles(), tol);
  f.den = concat(concat(pm.common, pm.a_only), pm.b_only);
  f.na = Poly::from_roots(concat(zm.a_only, pm.b_only), a.lead());
  f.nb = Poly::from_roots(concat(zm.b_only, pm.a_only), b.lead());
  return f;
}

}  // namespace

RatFun::RatFun(cplx c) : lead_(c) {}

RatFun RatFun::from_factors(cplx lead, std::vector<cplx> zeros, std::vector<cplx> poles,
                            const Tolerances& tol) {
  RatFun r;
  if (lead == cplx{}) return r;
  cancel(zeros, poles, tol.gcd);
  r.lead_ = lead;
  r.zeros_ = std::move(zeros);
  r.poles_ = std::move(poles);
  return r;
}

RatFun RatFun::from_coeffs(const Poly& num, const Poly& den, const Tolerances& tol) {
  if (den.is_zero()) throw DegenerateInput("rational function with zero denominator");
  if (num.is_zero()) return {};
  return from_factors(num.leading() / den.leading(), expand_roots(poly_roots(num, tol)),
                      expand_roots(poly_roots(den, tol)), tol);
}

RatFun RatFun::from_poly(const Poly& p, const Tolerances& tol) {
  if (p.is_zero()) return {};
  return from_factors(p.leading(), expand_roots(poly_roots(p, tol)), {}, tol);
}

RatFun RatFun::monomial(cplx a) {
  RatFun r(1.0);
  r.zeros_.push_back(a);
  return r;
}

RatFun RatFun::pole_term(cplx c, cplx p, int order) {
  RatFun r(c);
  if (c != cplx{}) r.poles_.assign(static_cast<std::size_t>(order), p);
  return r;
}

Poly RatFun::numerator() const { return Poly::from_roots(zeros_, lead_); }
Poly RatFun::denominator() const { return Poly::from_roots(poles_); }

cplx RatFun::eval_unchecked(cplx z) const {
  if (lead_ == cplx{}) return {};
  cplx v = lead_;
  // interleave to keep the running product near unit scale
  std::size_t i = 0, j = 0;
  while (i < zeros_.size() || j < poles_.size()) {
    if (i < zeros_.size()) v *= (z - zeros_[i++]);
    if (j < poles_.size()) v /= (z - poles_[j++]);
  }
  return v;
}

cplx RatFun::eval(cplx z, const Tolerances& tol) const {
  for (const cplx p : poles_)
    if (std::abs(z - p) <= tol.pole * std::max(1.0, std::abs(p))) throw PoleEvaluation(z, p);
  return eval_unchecked(z);
}

cplx RatFun::operator()(cplx z) const { return eval(z, default_tolerances()); }

std::vector<Root> RatFun::pole_clusters(const Tolerances& tol) const {
  return cluster_points(poles_, tol.cluster);
}

std::vector<Root> RatFun::zero_clusters(const Tolerances& tol) const {
  return cluster_points(zeros_, tol.cluster);
}

int RatFun::pole_order_at(cplx eta, double radius) const {
  int n = 0;
  for (const cplx p : poles_)
    if (close(p, eta, radius)) ++n;
  return n;
}

RatFun RatFun::conj_flip() const {
  RatFun r;
  r.lead_ = std::conj(lead_);
  r.zeros_.reserve(zeros_.size());
  r.poles_.reserve(poles_.size());
  for (const cplx z : zeros_) r.zeros_.push_back(std::conj(z));
  for (const cplx p : poles_) r.poles_.push_back(std::conj(p));
  return r;
}

RatFun RatFun::reciprocal() const {
  if (is_zero()) throw DegenerateInput("reciprocal of the zero function");
  RatFun r;
  r.lead_ = 1.0 / lead_;
  r.zeros_ = poles_;
  r.poles_ = zeros_;
  return r;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.lead_ = -lead_;
  return r;
}

RatFun multiply(const RatFun& a, const RatFun& b, const Tolerances& tol) {
  if (a.is_zero() || b.is_zero()) return {};
  return RatFun::from_factors(a.lead() * b.lead(), concat(a.zeros(), b.zeros()),
                              concat(a.poles(), b.poles()), tol);
}

RatFun add(const RatFun& a, const RatFun& b, const Tolerances& tol) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  CommonForm f = common_form(a, b, tol.gcd);
  const double scale = std::max(f.na.max_abs(), f.nb.max_abs());
  std::vector<cplx> c(std::max(f.na.coeffs().size(), f.nb.coeffs().size()));
  for (std::size_t k = 0; k < f.na.coeffs().size(); ++k) c[k] += f.na.coeffs()[k];
  for (std::size_t k = 0; k < f.nb.coeffs().size(); ++k) c[k] += f.nb.coeffs()[k];
  while (!c.empty() && std::abs(c.back()) <= tol.trim * scale) c.pop_back();
  if (c.empty()) return {};
  Poly num(std::move(c), tol);

  // exact deflation of denominator factors that the numerator shares
  std::vector<cplx> den;
  for (const cplx p : f.den) {
    const cplx at_p = num(p);
    if (num.degree() >= 1 && std::abs(at_p) <= tol.gcd * num.abs_scale(p)) {
      num = num.divmod(Poly::from_roots(std::vector<cplx>{p})).first;
      if (at_p != cplx{}) note_near_cancellation(p, p);
    } else {
      den.push_back(p);
    }
  }
  std::vector<cplx> zeros = f.common_zeros;
  const auto roots = expand_roots(poly_roots(num, tol));
  zeros.insert(zeros.end(), roots.begin(), roots.end());
  return RatFun::from_factors(num.leading(), std::move(zeros), std::move(den), tol);
}

RatFun operator+(const RatFun& a, const RatFun& b) { return add(a, b, default_tolerances()); }
RatFun operator-(const RatFun& a, const RatFun& b) { return add(a, -b, default_tolerances()); }
RatFun operator*(const RatFun& a, const RatFun& b) { return multiply(a, b, default_tolerances()); }
RatFun operator/(const RatFun& a, const RatFun& b) {
  return multiply(a, b.reciprocal(), default_tolerances());
}

double coefficient_defect(const RatFun& a, const RatFun& b, const Tolerances& tol) {
  if (a.is_zero() && b.is_zero()) return 0.0;
  if (a.is_zero() || b.is_zero()) return 1.0;
  CommonForm f = common_form(a, b, tol.gcd);
  const Poly diff = f.na - f.nb;
  const double scale = std::max(f.na.max_abs(), f.nb.max_abs());
  // common zeros multiply both sides identically
  return diff.max_abs() / scale;
}

std::vector<cplx> taylor_without_pole(const RatFun& r, cplx p, double radius, int count,
                                      int* removed_order) {
  std::vector<cplx> s(static_cast<std::size_t>(count), cplx{});
  int removed = 0;
  if (count <= 0) {
    if (removed_order) *removed_order = r.pole_order_at(p, radius);
    return s;
  }
  s[0] = r.lead();
  auto times_linear = [&](cplx d) {  // s *= (d + h)
    for (std::size_t k = s.size() - 1; k > 0; --k) s[k] = d * s[k] + s[k - 1];
    s[0] *= d;
  };
  auto divide_linear = [&](cplx d) {  // s /= (d + h)
    s[0] /= d;
    for (std::size_t k = 1; k < s.size(); ++k) s[k] = (s[k] - s[k - 1]) / d;
  };
  for (const cplx z : r.zeros()) times_linear(p - z);
  for (const cplx q : r.poles()) {
    if (close(q, p, radius)) {
      ++removed;
      continue;
    }
    divide_linear(p - q);
  }
  if (removed_order) *removed_order = removed;
  return s;
}

PartialFractions partial_fractions(const RatFun& r, const Tolerances& tol) {
  PartialFractions pf;
  if (r.is_zero()) return pf;
  if (r.degree() >= 0) pf.polynomial = r.numerator().divmod(r.denominator()).first;
  for (const Root& c : r.pole_clusters(tol)) {
    const auto t = taylor_without_pole(r, c.value, tol.cluster, c.multiplicity);
    PrincipalPart part{c.value, std::vector<cplx>(static_cast<std::size_t>(c.multiplicity))};
    for (int j = 0; j < c.multiplicity; ++j)
      part.coeffs[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(c.multiplicity - 1 - j)];
    pf.parts.push_back(std::move(part));
  }
  return pf;
}

RatFun from_partial_fractions(const PartialFractions& pf, const Tolerances& tol) {
  RatFun acc = RatFun::from_poly(pf.polynomial, tol);
  for (const auto& part : pf.parts)
    for (std::size_t j = 0; j < part.coeffs.size(); ++j)
      acc = add(acc, RatFun::pole_term(part.coeffs[j], part.pole, static_cast<int>(j) + 1), tol);
  return acc;
}

cplx residue(const RatFun& r, cplx p, const Tolerances& tol) {
  const int m = r.pole_order_at(p, tol.cluster);
  if (m == 0) return {};
  return taylor_without_pole(r, p, tol.cluster, m)[static_cast<std::size_t>(m - 1)];
}

}  // namespace resolab

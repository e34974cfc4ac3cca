#pragma once

#include <span>
#include <vector>

#include "resolab/poly.hpp"

namespace resolab {

/// Scalar rational function of one complex variable, kept in factored form
///
///     r(z) = lead * prod_j (z - zeros[j]) / prod_k (z - poles[k])
///
/// with zeros and poles that lie within tol.gcd of each other cancelled on
/// construction. Multiplicities are repeated entries. The zero function has
/// lead == 0 and no factors. Coefficient forms are produced on demand by
/// numerator() and denominator() (monic).
class RatFun {
 public:
  RatFun() = default;
  RatFun(cplx c);  // NOLINT: constants convert implicitly

  static RatFun from_factors(cplx lead, std::vector<cplx> zeros, std::vector<cplx> poles,
                             const Tolerances& tol = default_tolerances());
  static RatFun from_coeffs(const Poly& num, const Poly& den,
                            const Tolerances& tol = default_tolerances());
  static RatFun from_poly(const Poly& p, const Tolerances& tol = default_tolerances());
  /// z - a
  static RatFun monomial(cplx a);
  /// c / (z - p)^order
  static RatFun pole_term(cplx c, cplx p, int order);

  cplx lead() const { return lead_; }
  const std::vector<cplx>& zeros() const { return zeros_; }
  const std::vector<cplx>& poles() const { return poles_; }
  bool is_zero() const { return lead_ == cplx{}; }
  /// #zeros - #poles, the degree at infinity (meaningless for the zero function).
  int degree() const { return static_cast<int>(zeros_.size()) - static_cast<int>(poles_.size()); }

  Poly numerator() const;
  Poly denominator() const;

  /// Throws PoleEvaluation if z is within tol.pole of a pole.
  cplx operator()(cplx z) const;
  cplx eval(cplx z, const Tolerances& tol) const;
  cplx eval_unchecked(cplx z) const;

  std::vector<Root> pole_clusters(const Tolerances& tol = default_tolerances()) const;
  std::vector<Root> zero_clusters(const Tolerances& tol = default_tolerances()) const;
  /// Multiplicity of the pole cluster at eta (0 if holomorphic there).
  int pole_order_at(cplx eta, double radius) const;

  /// r#(z) = conj(r(conj z)): conjugated lead, zeros and poles.
  RatFun conj_flip() const;
  RatFun reciprocal() const;

  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun operator-() const;

 private:
  cplx lead_{};
  std::vector<cplx> zeros_;
  std::vector<cplx> poles_;
};

RatFun add(const RatFun& a, const RatFun& b, const Tolerances& tol);
RatFun multiply(const RatFun& a, const RatFun& b, const Tolerances& tol);

/// Largest coefficient of num_a*den_b - num_b*den_a over a common
/// denominator, relative to the coefficient scale of the two products.
/// Zero iff a == b as rational functions.
double coefficient_defect(const RatFun& a, const RatFun& b,
                          const Tolerances& tol = default_tolerances());

/// First `count` Taylor coefficients at p of r(z) * (z - p)^m, where m is the
/// number of poles of r within `radius` of p (those poles are removed).
std::vector<cplx> taylor_without_pole(const RatFun& r, cplx p, double radius, int count,
                                      int* removed_order = nullptr);

/// Partial-fraction form: polynomial part plus principal parts
/// sum_j coeffs[j] / (z - pole)^(j+1) at each pole cluster.
struct PrincipalPart {
  cplx pole;
  std::vector<cplx> coeffs;
};
struct PartialFractions {
  Poly polynomial;
  std::vector<PrincipalPart> parts;
};

PartialFractions partial_fractions(const RatFun& r, const Tolerances& tol = default_tolerances());
RatFun from_partial_fractions(const PartialFractions& pf, const Tolerances& tol = default_tolerances());

/// Residue of r at the pole cluster containing p.
cplx residue(const RatFun& r, cplx p, const Tolerances& tol = default_tolerances());

}  // namespace resolab

#pragma once

#include <span>
#include <vector>

#include "resolab/tolerances.hpp"

namespace resolab {

/// Dense polynomial with complex coefficients in ascending degree. The zero
/// polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  /// Trailing coefficients below tol.trim * max|c| are dropped.
  explicit Poly(std::vector<cplx> coeffs, const Tolerances& tol = default_tolerances());

  static Poly constant(cplx c);
  /// lead * prod (z - r)
  static Poly from_roots(std::span<const cplx> roots, cplx lead = 1.0);

  const std::vector<cplx>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  cplx leading() const { return c_.empty() ? cplx{} : c_.back(); }
  double max_abs() const;

  cplx operator()(cplx z) const;
  /// Sum of |c_k| |z|^k, the natural scale for a residual at z.
  double abs_scale(cplx z) const;

  Poly derivative() const;
  Poly monic() const;
  /// Quotient and remainder.
  std::pair<Poly, Poly> divmod(const Poly& d) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(cplx s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  struct Raw {};
  Poly(Raw, std::vector<cplx> c) : c_(std::move(c)) {}
  std::vector<cplx> c_;
};

struct Root {
  cplx value;
  int multiplicity = 1;
};

/// Roots via companion-matrix eigenvalues, Newton polish, then clustering
/// within tol.cluster. Throws DegenerateInput for the zero polynomial.
std::vector<Root> poly_roots(const Poly& p, const Tolerances& tol = default_tolerances());

/// Groups points lying within `radius` (relative to max(1,|z|)) of each other;
/// each cluster is reported at its centroid.
std::vector<Root> cluster_points(std::span<const cplx> pts, double radius);

std::vector<cplx> expand_roots(std::span<const Root> roots);

}  // namespace resolab

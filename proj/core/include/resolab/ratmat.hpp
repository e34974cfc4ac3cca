#pragma once

#include <Eigen/Dense>
#include <vector>

#include "resolab/ratfun.hpp"

namespace resolab {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// rows x cols matrix of rational functions, row-major.
class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols);

  static RatMat identity(int n);
  static RatMat constant(const CMatrix& m);
  static RatMat scalar(const RatFun& r) { RatMat m(1, 1); m(0, 0) = r; return m; }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  RatFun& operator()(int r, int c) { return e_[static_cast<std::size_t>(r * cols_ + c)]; }
  const RatFun& operator()(int r, int c) const { return e_[static_cast<std::size_t>(r * cols_ + c)]; }
  const std::vector<RatFun>& entries() const { return e_; }

  CMatrix operator()(cplx z) const;
  CMatrix eval(cplx z, const Tolerances& tol) const;
  CMatrix eval_unchecked(cplx z) const;

  RatMat transpose() const;
  /// Entrywise conj_flip followed by transposition: R#(z) = R(conj z)^*.
  RatMat conj_flip() const;
  RatMat column(int c) const;

  /// Distinct poles over all entries; order = max entry order at the point.
  std::vector<Root> pole_clusters(const Tolerances& tol = default_tolerances()) const;

  friend RatMat operator+(const RatMat& a, const RatMat& b);
  friend RatMat operator-(const RatMat& a, const RatMat& b);
  friend RatMat operator*(const RatMat& a, const RatMat& b);
  friend RatMat operator*(const RatFun& s, const RatMat& a);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<RatFun> e_;
};

enum class Branch { upper, lower };

RatFun det(const RatMat& m);
/// Adjugate over determinant. Throws SingularMatrix if det vanishes identically.
RatMat mat_inverse(const RatMat& m);

/// C(z) = integral over R of R(l)/(z-l) dl, closed form by residues, valid for
/// z in the chosen half-plane and continued rationally elsewhere. Throws
/// NonIntegrable unless every entry decays like l^-2 and has no real poles.
RatMat cauchy_transform(const RatMat& r, Branch branch, const Tolerances& tol = default_tolerances());

/// Located pole with leading Laurent coefficient.
struct PoleRecord {
  cplx location;
  int order = 0;
  CMatrix leading;
  std::vector<double> leading_svals;  // descending
  std::string source;                 // set by callers that know it
};

/// order = max entry pole order at eta; leading = lim (z-eta)^order R(z).
/// Throws HolomorphicPoint when no entry has a pole at eta.
PoleRecord laurent_leading(const RatMat& r, cplx eta, const Tolerances& tol = default_tolerances());

/// Max over entries of coefficient_defect.
double coefficient_defect(const RatMat& a, const RatMat& b, const Tolerances& tol = default_tolerances());

std::vector<double> singular_values(const CMatrix& m);

}  // namespace resolab

#pragma once

#include "resolab/scattering.hpp"

namespace resolab {

/// Closed rectangle [re_min, re_max] x [im_min, im_max].
struct Region {
  double re_min = -2, re_max = 2, im_min = -2, im_max = 0;
  bool contains(cplx z) const {
    return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min && z.imag() <= im_max;
  }
  Region inflated(double fraction) const;
};

struct ResonanceRecord {
  cplx zeta;
  int multiplicity = 1;
  double det_residual = 0.0;  // |det L₊(ζ)|
  double det_scale = 0.0;     // product of column norms of L₊(ζ)
  std::vector<double> newton_residuals;
  CMatrix kernel_e;             // orthonormal columns
  std::vector<CVector> mult_k;  // M(ζ)e per kernel column
  bool degenerate = false;      // some M(ζ)e vanishes
};

struct ResonanceSearch {
  Region region;  // as finally used (possibly inflated)
  bool inflated = false;
  std::vector<ResonanceRecord> resonances;
  int polished_count = 0;  // with multiplicity
  int audit_count = 0;     // argument principle
  bool audit_ok() const { return polished_count == audit_count; }
};

/// Zeros of det L₊ (continued) in a region of the closed lower half-plane.
ResonanceSearch find_resonances(const FriedrichsModel& m, const Region& region,
                                const Tolerances& tol = default_tolerances());

/// det L₊(z) times (z - q) for every pole q of det L₊, so that contour counts
/// see zeros only.
cplx cleared_livsic_det(const RatMat& lplus, const RatFun& det_l, cplx z);

/// Orthonormal null basis of L₊(ζ) (SVD, relative threshold). Throws NoNullVector.
CMatrix livsic_kernel(const FriedrichsModel& m, cplx zeta, const Tolerances& tol = default_tolerances());
CMatrix livsic_kernel(const RatMat& lplus, const CMatrix& h_e, cplx zeta, const Tolerances& tol = default_tolerances());

struct LemmaReport {
  cplx zeta;
  int dim_ker_s = 0;   // dim ker S(conj ζ)^*
  int dim_span_k = 0;  // dim span{M(ζ)e : L₊(ζ)e = 0}
  double max_angle = 0.0;
  std::string verdict;  // "pass", "fail" or "vacuous"
  double forward_residual = 0.0;     // max ||S(conj ζ)^* k|| / ||k||, k = M(ζ)e
  double construction_residual = 0.0;  // ||M(ζ)e - k|| / ||k|| with e := -2πi (L₊(conj ζ)⁻¹)^* M(conj ζ)^* k
  double construction_kernel_residual = 0.0;  // ||L₊(ζ)e|| / ||e|| for the same e
  CMatrix ker_s;
  CMatrix span_k;
};

/// Throws ConjugatePole if conj ζ is a pole of S.
LemmaReport verify_lemma(const FriedrichsModel& m, cplx zeta, const Tolerances& tol = default_tolerances());
LemmaReport verify_lemma(const FriedrichsModel& m, const SMatrix& s, const RatMat& lplus, cplx zeta,
                         const Tolerances& tol = default_tolerances());

/// Orthonormal basis of the numerical null space of a (SVD, threshold
/// rel·max(σ_max, floor)).
CMatrix null_space(const CMatrix& a, double rel, double floor = 0.0);
/// Orthonormal basis of the column space of a (same threshold convention).
CMatrix range_basis(const CMatrix& a, double rel);
/// Largest principal angle between two column spaces with orthonormal bases.
double max_principal_angle(const CMatrix& q1, const CMatrix& q2);

}  // namespace resolab

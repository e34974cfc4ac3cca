#pragma once

#include <utility>

#include "resolab/livsic.hpp"

namespace resolab {

/// Global rational scattering matrix with its poles split by half-plane.
/// PoleRecord::source is "coupling" (pole of M or M#), "livsic_zero" (zero of
/// det L₊) or "coupling+livsic_zero".
struct SMatrix {
  RatMat s;
  std::vector<PoleRecord> poles_upper;
  std::vector<PoleRecord> poles_lower;
};

/// S = I - 2πi M L₊⁻¹ M#, reduced. Throws SingularMatrix if det L₊ ≡ 0.
SMatrix smatrix(const FriedrichsModel& m, const Tolerances& tol = default_tolerances());

/// The same matrix assembled from the lower branch plus the jump.
RatMat smatrix_from_lower(const FriedrichsModel& m, const Tolerances& tol = default_tolerances());

/// ||S(λ)^* S(λ) - I||_2.
double unitarity_defect(const RatMat& s, double lambda);
double unitarity_defect(const FriedrichsModel& m, double lambda);

struct ConditionsReport {
  // (I)
  bool finitely_many_upper_poles = true;
  int upper_pole_count = 0;
  // (II)
  bool bounded = false;
  double bound_constant = 0.0;
  double radius = 0.0;
  // (III)
  bool no_conjugate_pairs = true;
  std::vector<std::pair<cplx, cplx>> conjugate_pairs;  // (upper, lower)
  // (IV)
  bool has_lower_pole = false;

  bool all_pass() const { return finitely_many_upper_poles && bounded && no_conjugate_pairs && has_lower_pole; }
};

ConditionsReport theorem2_conditions(const SMatrix& s);
ConditionsReport theorem2_conditions(const FriedrichsModel& m, const Tolerances& tol = default_tolerances());

/// Pole record of S at eta, located among the known poles (nearest within
/// τ_cluster). Throws HolomorphicPoint otherwise.
PoleRecord leading_coefficient(const SMatrix& s, cplx eta, const Tolerances& tol = default_tolerances());
PoleRecord leading_coefficient(const FriedrichsModel& m, cplx eta, const Tolerances& tol = default_tolerances());

/// Pole of S near z (relative τ_cluster), if any.
const PoleRecord* find_pole(const SMatrix& s, cplx z, const Tolerances& tol = default_tolerances());

}  // namespace resolab

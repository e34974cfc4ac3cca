#pragma once

#include "resolab/model.hpp"

namespace resolab {

/// L(z) = z - h_e - C(z), C the Cauchy transform of M#M on the chosen branch.
/// Both branches are rational; each is its own continuation off its half-plane.
RatMat livsic_branch(const FriedrichsModel& m, Branch branch, const Tolerances& tol = default_tolerances());

/// M#M, the E-block density of the Livšic integral.
RatMat coupling_gram(const FriedrichsModel& m, const Tolerances& tol = default_tolerances());

struct LivsicPair {
  RatMat upper;
  RatMat lower;
  RatMat jump;  // 2πi M#M
};

/// Branches are computed independently, so the jump identity is a real check.
LivsicPair livsic_pair(const FriedrichsModel& m, const Tolerances& tol = default_tolerances());

/// ||upper(conj z)^* - lower(z)||_2.
double livsic_symmetry_defect(const LivsicPair& p, cplx z, const Tolerances& tol = default_tolerances());
double livsic_symmetry_defect(const FriedrichsModel& m, cplx z, const Tolerances& tol = default_tolerances());

/// Coefficientwise defect of upper - (lower + jump).
double continuation_defect(const LivsicPair& p, const Tolerances& tol = default_tolerances());

/// Defect of conj_flip(upper) against lower, coefficientwise.
double symmetry_coefficient_defect(const LivsicPair& p, const Tolerances& tol = default_tolerances());

}  // namespace resolab

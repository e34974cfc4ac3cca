#include "resolab/livsic.hpp"

#include "resolab/errors.hpp"

namespace resolab {

RatMat coupling_gram(const FriedrichsModel& m, const Tolerances&) {
  return m.coupling.conj_flip() * m.coupling;
}

RatMat livsic_branch(const FriedrichsModel& m, Branch branch, const Tolerances& tol) {
  const RatMat c = cauchy_transform(coupling_gram(m, tol), branch, tol);
  return RatFun::monomial(0.0) * RatMat::identity(m.dim_e) - RatMat::constant(m.h_e) - c;
}

LivsicPair livsic_pair(const FriedrichsModel& m, const Tolerances& tol) {
  LivsicPair p;
  p.upper = livsic_branch(m, Branch::upper, tol);
  p.lower = livsic_branch(m, Branch::lower, tol);
  p.jump = RatFun(2.0 * pi * I) * coupling_gram(m, tol);
  return p;
}

double livsic_symmetry_defect(const LivsicPair& p, cplx z, const Tolerances& tol) {
  const CMatrix a = p.upper.eval(std::conj(z), tol).adjoint();
  const CMatrix b = p.lower.eval(z, tol);
  const auto sv = singular_values(a - b);
  return sv.empty() ? 0.0 : sv.front();
}

double livsic_symmetry_defect(const FriedrichsModel& m, cplx z, const Tolerances& tol) {
  return livsic_symmetry_defect(livsic_pair(m, tol), z, tol);
}

double continuation_defect(const LivsicPair& p, const Tolerances& tol) {
  return coefficient_defect(p.upper, p.lower + p.jump, tol);
}

double symmetry_coefficient_defect(const LivsicPair& p, const Tolerances& tol) {
  return coefficient_defect(p.upper.conj_flip(), p.lower, tol);
}

}  // namespace resolab

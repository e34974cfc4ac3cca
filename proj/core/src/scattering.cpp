#include "resolab/scattering.hpp"

#include <cmath>

#include "resolab/errors.hpp"

namespace resolab {

namespace {

bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

RatMat assemble(const FriedrichsModel& m, const RatMat& lplus) {
  const RatMat inner = m.coupling * mat_inverse(lplus) * m.coupling.conj_flip();
  return RatMat::identity(m.dim_k) - RatFun(2.0 * pi * I) * inner;
}

std::string pole_source(cplx z, const FriedrichsModel& m, const RatFun& det_l, const Tolerances& tol) {
  bool coupling = false;
  for (const auto& e : m.coupling.entries())
    for (const cplx p : e.poles()) coupling = coupling || near(p, z, tol.cluster) || near(std::conj(p), z, tol.cluster);
  bool livsic = false;
  for (const cplx q : det_l.zeros()) livsic = livsic || near(q, z, tol.cluster);
  if (coupling && livsic) return "coupling+livsic_zero";
  if (livsic) return "livsic_zero";
  return coupling ? "coupling" : "unknown";
}

}  // namespace

SMatrix smatrix(const FriedrichsModel& m, const Tolerances& tol) {
  const RatMat lplus = livsic_branch(m, Branch::upper, tol);
  SMatrix out;
  out.s = assemble(m, lplus);
  const RatFun det_l = det(lplus);
  for (const Root& r : out.s.pole_clusters(tol)) {
    PoleRecord rec = laurent_leading(out.s, r.value, tol);
    rec.source = pole_source(r.value, m, det_l, tol);
    (r.value.imag() > 0 ? out.poles_upper : out.poles_lower).push_back(std::move(rec));
  }
  return out;
}

RatMat smatrix_from_lower(const FriedrichsModel& m, const Tolerances& tol) {
  const LivsicPair p = livsic_pair(m, tol);
  return assemble(m, p.lower + p.jump);
}

double unitarity_defect(const RatMat& s, double lambda) {
  const CMatrix v = s(cplx(lambda, 0.0));
  const CMatrix d = v.adjoint() * v - CMatrix::Identity(v.rows(), v.cols());
  return singular_values(d).front();
}

double unitarity_defect(const FriedrichsModel& m, double lambda) { return unitarity_defect(smatrix(m).s, lambda); }

ConditionsReport theorem2_conditions(const SMatrix& s) {
  ConditionsReport rep;
  rep.upper_pole_count = static_cast<int>(s.poles_upper.size());
  rep.finitely_many_upper_poles = true;  // rational S
  double max_mod = 0.0;
  for (const auto* list : {&s.poles_upper, &s.poles_lower})
    for (const auto& p : *list) max_mod = std::max(max_mod, std::abs(p.location));
  rep.radius = 2.0 * (1.0 + max_mod);
  // sup of ||S|| over the upper half annulus R <= |z| <= 10R
  constexpr int n_rad = 24, n_ang = 48;
  for (int a = 0; a < n_rad; ++a) {
    const double r = rep.radius * std::pow(10.0, static_cast<double>(a) / (n_rad - 1));
    for (int b = 0; b < n_ang; ++b) {
      const double th = pi * (b + 0.5) / n_ang;
      const CMatrix v = s.s(std::polar(r, th));
      rep.bound_constant = std::max(rep.bound_constant, singular_values(v).front());
    }
  }
  bool proper = true;
  for (const auto& e : s.s.entries()) proper = proper && (e.is_zero() || e.degree() <= 0);
  rep.bounded = proper && std::isfinite(rep.bound_constant);
  for (const auto& u : s.poles_upper)
    for (const auto& l : s.poles_lower)
      if (std::abs(u.location - std::conj(l.location)) <= 1e-7) rep.conjugate_pairs.emplace_back(u.location, l.location);
  rep.no_conjugate_pairs = rep.conjugate_pairs.empty();
  rep.has_lower_pole = !s.poles_lower.empty();
  return rep;
}

ConditionsReport theorem2_conditions(const FriedrichsModel& m, const Tolerances& tol) {
  return theorem2_conditions(smatrix(m, tol));
}

const PoleRecord* find_pole(const SMatrix& s, cplx z, const Tolerances& tol) {
  for (const auto* list : {&s.poles_upper, &s.poles_lower})
    for (const auto& p : *list)
      if (near(p.location, z, tol.cluster)) return &p;
  return nullptr;
}

PoleRecord leading_coefficient(const SMatrix& s, cplx eta, const Tolerances& tol) {
  const PoleRecord* p = find_pole(s, eta, tol);
  if (!p) throw HolomorphicPoint(eta);
  return *p;
}

PoleRecord leading_coefficient(const FriedrichsModel& m, cplx eta, const Tolerances& tol) {
  return leading_coefficient(smatrix(m, tol), eta, tol);
}

}  // namespace resolab

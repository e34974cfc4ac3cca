#include "resolab/resonances.hpp"

#include <cmath>
#include <sstream>

#include "resolab/errors.hpp"
#include "resolab/oracle.hpp"

namespace resolab {

Region Region::inflated(double fraction) const {
  const double dx = fraction * (re_max - re_min), dy = fraction * (im_max - im_min);
  return {re_min - dx, re_max + dx, im_min - dy, im_max + dy};
}

CMatrix null_space(const CMatrix& a, double rel, double floor) {
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = std::max(s.size() ? s(0) : 0.0, floor);
  std::vector<Eigen::Index> idx;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    if (j >= s.size() || s(j) <= rel * smax) idx.push_back(j);
  CMatrix out(a.cols(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = svd.matrixV().col(idx[k]);
  return out;
}

CMatrix range_basis(const CMatrix& a, double rel) {
  if (a.cols() == 0) return CMatrix(a.rows(), 0);
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > rel * s(0) && s(r) > 0.0) ++r;
  return svd.matrixU().leftCols(r);
}

double max_principal_angle(const CMatrix& q1, const CMatrix& q2) {
  if (q1.cols() == 0 && q2.cols() == 0) return 0.0;
  if (q1.cols() != q2.cols()) return pi / 2;
  // sines of the principal angles are the singular values of (I - Q1 Q1^*) Q2
  const CMatrix r = q2 - q1 * (q1.adjoint() * q2);
  const double s = singular_values(r).front();
  return std::asin(std::min(1.0, s));
}

cplx cleared_livsic_det(const RatMat& lplus, const RatFun& det_l, cplx z) {
  cplx d = lplus.eval_unchecked(z).determinant();
  for (const cplx q : det_l.poles()) d *= (z - q);
  return d;
}

CMatrix livsic_kernel(const RatMat& lplus, const CMatrix& h_e, cplx zeta, const Tolerances& tol) {
  const CMatrix l = lplus.eval(zeta, tol);
  const auto sv = singular_values(l);
  const double scale = std::max(sv.front(), 1.0 + std::abs(zeta) + singular_values(h_e).front());
  Eigen::JacobiSVD<CMatrix> svd(l, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  std::vector<Eigen::Index> idx;
  for (Eigen::Index j = 0; j < s.size(); ++j)
    if (s(j) <= 1e-8 * scale) idx.push_back(j);
  if (idx.empty()) {
    std::ostringstream os;
    os << "L₊(" << zeta.real() << (zeta.imag() < 0 ? "" : "+") << zeta.imag() << "i) has smallest singular value "
       << s(s.size() - 1) << " > " << 1e-8 * scale;
    throw NoNullVector(os.str());
  }
  CMatrix out(l.cols(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = svd.matrixV().col(idx[k]);
  return out;
}

CMatrix livsic_kernel(const FriedrichsModel& m, cplx zeta, const Tolerances& tol) {
  return livsic_kernel(livsic_branch(m, Branch::upper, tol), m.h_e, zeta, tol);
}

namespace {

ResonanceRecord polish(const FriedrichsModel& m, const RatMat& lplus, const RatFun& det_l, const Root& root,
                       const Tolerances& tol) {
  ResonanceRecord rec;
  rec.multiplicity = root.multiplicity;
  cplx z = root.value;
  auto f = [&](cplx w) { return cleared_livsic_det(lplus, det_l, w); };
  double res = std::abs(f(z));
  rec.newton_residuals.push_back(res);
  for (int it = 0; it < 6 && res > 0.0; ++it) {
    const double h = 1e-6 * std::max(1.0, std::abs(z));
    const cplx df = (f(z + h) - f(z - h)) / (2.0 * h);
    if (df == cplx{}) break;
    const cplx next = z - static_cast<double>(rec.multiplicity) * f(z) / df;
    const double r = std::abs(f(next));
    if (!(r < res)) break;
    z = next;
    res = r;
    rec.newton_residuals.push_back(res);
  }
  rec.zeta = z;
  const CMatrix l = lplus.eval_unchecked(z);
  rec.det_residual = std::abs(l.determinant());
  rec.det_scale = 1.0;
  for (Eigen::Index j = 0; j < l.cols(); ++j) rec.det_scale *= l.col(j).norm();
  rec.kernel_e = livsic_kernel(lplus, m.h_e, z, tol);
  const CMatrix mz = m.coupling.eval(z, tol);
  for (Eigen::Index j = 0; j < rec.kernel_e.cols(); ++j) {
    rec.mult_k.push_back(mz * rec.kernel_e.col(j));
    if (rec.mult_k.back().norm() <= 1e-12 * std::max(1.0, mz.norm())) rec.degenerate = true;
  }
  return rec;
}

double boundary_distance(const Region& r, cplx z) {
  const double x = z.real(), y = z.imag();
  auto seg = [](double v, double lo, double hi) { return std::max({lo - v, 0.0, v - hi}); };
  const double dx_out = seg(x, r.re_min, r.re_max), dy_out = seg(y, r.im_min, r.im_max);
  if (dx_out > 0 || dy_out > 0) return std::hypot(dx_out, dy_out);
  return std::min({x - r.re_min, r.re_max - x, y - r.im_min, r.im_max - y});
}

}  // namespace

ResonanceSearch find_resonances(const FriedrichsModel& m, const Region& region, const Tolerances& tol) {
  if (!(region.re_max > region.re_min && region.im_max > region.im_min))
    throw DegenerateInput("empty search region");
  if (region.im_max > 0.0) throw DegenerateInput("search region must lie in the closed lower half-plane");
  const RatMat lplus = livsic_branch(m, Branch::upper, tol);
  const RatFun det_l = det(lplus);
  const auto zeros = det_l.zero_clusters(tol);
  const auto fn = [&](cplx z) { return cleared_livsic_det(lplus, det_l, z); };

  ResonanceSearch out;
  Region reg = region;
  for (int attempt = 0; attempt < 2; ++attempt) {
    const double clearance = 1e-6 * std::max(1.0, std::max(reg.re_max - reg.re_min, reg.im_max - reg.im_min));
    bool close = false;
    for (const Root& z : zeros) close = close || boundary_distance(reg, z.value) < clearance;
    for (const cplx q : det_l.poles()) close = close || boundary_distance(reg, q) < clearance;
    if (!close) {
      try {
        out.audit_count = oracle::argument_principle_count(
            fn, {cplx(reg.re_min, reg.im_min), cplx(reg.re_max, reg.im_max), 256});
        out.region = reg;
        out.inflated = attempt > 0;
        break;
      } catch (const ContourError&) {
      }
    }
    if (attempt == 1) throw ContourError("search contour passes too close to a zero or pole, also after inflation");
    reg = reg.inflated(0.01);
  }

  for (const Root& z : zeros) {
    if (!out.region.contains(z.value)) continue;
    out.resonances.push_back(polish(m, lplus, det_l, z, tol));
    out.polished_count += z.multiplicity;
  }
  std::sort(out.resonances.begin(), out.resonances.end(), [](const ResonanceRecord& a, const ResonanceRecord& b) {
    if (a.zeta.real() != b.zeta.real()) return a.zeta.real() < b.zeta.real();
    return a.zeta.imag() < b.zeta.imag();
  });
  return out;
}

LemmaReport verify_lemma(const FriedrichsModel& m, const SMatrix& s, const RatMat& lplus, cplx zeta,
                         const Tolerances& tol) {
  const cplx zb = std::conj(zeta);
  if (find_pole(s, zb, tol)) throw ConjugatePole(zeta);
  CMatrix sbar;
  try {
    sbar = s.s.eval(zb, tol);
  } catch (const PoleEvaluation&) {
    throw ConjugatePole(zeta);
  }
  LemmaReport rep;
  rep.zeta = zeta;
  const CMatrix sstar = sbar.adjoint();
  rep.ker_s = null_space(sstar, 1e-8, 1.0);  // S is unitary on R: unit scale
  rep.dim_ker_s = static_cast<int>(rep.ker_s.cols());

  CMatrix kernel_e(m.dim_e, 0);
  try {
    kernel_e = livsic_kernel(lplus, m.h_e, zeta, tol);
  } catch (const NoNullVector&) {
  }
  const CMatrix mz = m.coupling.eval(zeta, tol);
  const CMatrix ks = mz * kernel_e;
  rep.span_k = range_basis(ks, 1e-8);
  rep.dim_span_k = static_cast<int>(rep.span_k.cols());

  for (Eigen::Index j = 0; j < ks.cols(); ++j) {
    const double nk = ks.col(j).norm();
    if (nk > 0) rep.forward_residual = std::max(rep.forward_residual, (sstar * ks.col(j)).norm() / nk);
  }
  // converse direction: rebuild e from each null vector of S(conj ζ)^*
  if (rep.dim_ker_s > 0) {
    const CMatrix lbar_inv_adj = lplus.eval(zb, tol).inverse().adjoint();
    const CMatrix mbar_adj = m.coupling.eval(zb, tol).adjoint();
    const CMatrix lz = lplus.eval(zeta, tol);
    for (Eigen::Index j = 0; j < rep.ker_s.cols(); ++j) {
      const CVector k = rep.ker_s.col(j);
      const CVector e = -2.0 * pi * I * (lbar_inv_adj * (mbar_adj * k));
      rep.construction_residual = std::max(rep.construction_residual, (mz * e - k).norm() / k.norm());
      if (e.norm() > 0)
        rep.construction_kernel_residual = std::max(rep.construction_kernel_residual, (lz * e).norm() / e.norm());
    }
  }

  if (rep.dim_ker_s == 0 && rep.dim_span_k == 0) {
    rep.verdict = "vacuous";
  } else if (rep.dim_ker_s != rep.dim_span_k) {
    rep.max_angle = pi / 2;
    rep.verdict = "fail";
  } else {
    rep.max_angle = max_principal_angle(rep.ker_s, rep.span_k);
    rep.verdict = rep.max_angle <= 1e-6 ? "pass" : "fail";
  }
  return rep;
}

LemmaReport verify_lemma(const FriedrichsModel& m, cplx zeta, const Tolerances& tol) {
  return verify_lemma(m, smatrix(m, tol), livsic_branch(m, Branch::upper, tol), zeta, tol);
}

}  // namespace resolab

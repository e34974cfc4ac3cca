#include "resolab/json_io.hpp"

#include <cmath>

namespace resolab::json {

// + 0.0 folds -0.0 so that serialized zeros are sign-stable
json complex_to(cplx z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

json poly_to(const Poly& p) {
  json a = json::array();
  for (const cplx c : p.coeffs()) a.push_back(complex_to(c));
  return a;
}

json ratfun_to(const RatFun& r) { return {{"num", poly_to(r.numerator())}, {"den", poly_to(r.denominator())}}; }

json ratmat_to(const RatMat& m) {
  json a = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(ratfun_to(m(i, j)));
    a.push_back(row);
  }
  return a;
}

json matrix_to(const CMatrix& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to(m(i, j)));
    a.push_back(row);
  }
  return a;
}

json vector_to(const CVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(complex_to(v(i)));
  return a;
}

json pole_to(const PoleRecord& p) {
  json j{{"zeta", complex_to(p.location)}, {"order", p.order}, {"leading_svals", p.leading_svals}};
  if (!p.source.empty()) j["source"] = p.source;
  return j;
}

json validation_to(const ValidationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"slack", c.slack}, {"detail", c.detail}});
  return {{"ok", r.ok()}, {"checks", checks}};
}

json conditions_to(const ConditionsReport& r) {
  json pairs = json::array();
  for (const auto& [u, l] : r.conjugate_pairs) pairs.push_back({{"upper", complex_to(u)}, {"lower", complex_to(l)}});
  return {{"finitely_many_upper_poles", r.finitely_many_upper_poles},
          {"upper_pole_count", r.upper_pole_count},
          {"bounded", r.bounded},
          {"bound_constant", r.bound_constant},
          {"radius", r.radius},
          {"no_conjugate_pairs", r.no_conjugate_pairs},
          {"conjugate_pairs", pairs},
          {"has_lower_pole", r.has_lower_pole},
          {"all_pass", r.all_pass()}};
}

json resonance_to(const ResonanceRecord& r) {
  json ks = json::array();
  for (const auto& k : r.mult_k) ks.push_back(vector_to(k));
  return {{"zeta", complex_to(r.zeta)},
          {"multiplicity", r.multiplicity},
          {"det_residual", r.det_residual},
          {"det_scale", r.det_scale},
          {"newton_residuals", r.newton_residuals},
          {"kernel_e", matrix_to(r.kernel_e)},
          {"mult_k", ks},
          {"degenerate", r.degenerate}};
}

json search_to(const ResonanceSearch& s) {
  json res = json::array();
  for (const auto& r : s.resonances) res.push_back(resonance_to(r));
  return {{"region", {s.region.re_min, s.region.re_max, s.region.im_min, s.region.im_max}},
          {"inflated", s.inflated},
          {"resonances", res},
          {"audit", {{"polished_count", s.polished_count}, {"argument_principle_count", s.audit_count},
                     {"ok", s.audit_ok()}}}};
}

json lemma_to(const LemmaReport& r) {
  return {{"zeta", complex_to(r.zeta)},
          {"dim_ker_s", r.dim_ker_s},
          {"dim_span_k", r.dim_span_k},
          {"max_angle", r.max_angle},
          {"verdict", r.verdict},
          {"forward_residual", r.forward_residual},
          {"construction_residual", r.construction_residual},
          {"construction_kernel_residual", r.construction_kernel_residual},
          {"ker_s", matrix_to(r.ker_s)},
          {"span_k", matrix_to(r.span_k)}};
}

json nogo_to(const NoGoReport& r) {
  json p = json::array();
  for (std::size_t k = 0; k < r.t.size(); ++k)
    p.push_back({{"t", r.t[k]}, {"amplitude", complex_to(r.amplitude[k])}, {"P", r.probability[k]},
                 {"log10_ratio", r.log10_ratio[k]}});
  return {{"c", r.bw.c},
          {"alpha", r.bw.alpha},
          {"samples", p},
          {"fit_range", {r.fit_t_min, r.fit_t_max}},
          {"tail_slope", r.tail_slope},
          {"max_log10_ratio", r.max_log10_ratio},
          {"deviation_monotone", r.deviation_monotone},
          {"verdict", r.verdict}};
}

json bases_to(const SubspaceBases& b) {
  json poles = json::array();
  for (const Root& r : b.upper_poles) poles.push_back({{"eta", complex_to(r.value)}, {"order", r.multiplicity}});
  return {{"p", poly_to(b.p)},
          {"g", b.g},
          {"upper_poles", poles},
          {"n_max", b.n_max},
          {"basis_size", b.mplus.size()},
          {"nplus_valid", b.nplus_valid},
          {"mplus_valid", b.mplus_valid},
          {"max_mplus_pole_imag", std::isfinite(b.max_mplus_pole_imag) ? json(b.max_mplus_pole_imag) : json()}};
}

json eigen_to(const EigenReport& r) {
  json sg = json::array();
  for (const auto& [t, d] : r.semigroup_defects) sg.push_back({{"t", t}, {"defect", d}});
  return {{"zeta", complex_to(r.zeta)},
          {"k0", vector_to(r.k0)},
          {"case", r.case_tag},
          {"zeta_is_pole", r.zeta_is_pole},
          {"zeta_bar_is_pole", r.zeta_bar_is_pole},
          {"condition_residual", r.condition_residual},
          {"algebraic_condition", r.algebraic_condition},
          {"max_orthogonality", r.max_orthogonality},
          {"orthogonality_by_n", r.orthogonality_by_n},
          {"orthogonal", r.orthogonal()},
          {"semigroup_defects", sg}};
}

json resolvent_to(const ResolventReport& r) {
  json j{{"zeta", complex_to(r.zeta)},
         {"case", r.case_tag},
         {"k0", vector_to(r.k0)},
         {"h", ratmat_to(r.h)},
         {"f", ratmat_to(r.f)},
         {"tplus_certificate", r.tplus_certificate},
         {"h_in_hardy_minus", r.h_in_hardy_minus},
         {"f_in_hardy_plus", r.f_in_hardy_plus},
         {"pole_cancellation_residual", r.pole_cancellation_residual},
         {"max_orthogonality", r.max_orthogonality},
         {"certificates_pass", r.certificates_pass()}};
  if (r.uniqueness_min_residual >= 0) j["uniqueness_min_residual"] = r.uniqueness_min_residual;
  if (r.case_tag == "(ii)(b)") {
    j["c"] = complex_to(r.c_scalar);
    j["a_min_sval"] = r.a_min_sval;
  }
  return j;
}

}  // namespace resolab::json

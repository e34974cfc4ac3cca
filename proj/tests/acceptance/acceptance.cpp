// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// Tolerances and runtime limits are fixed here, not read from the library.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "resolab/decay.hpp"
#include "resolab/hardy.hpp"
#include "resolab/livsic.hpp"
#include "resolab/oracle.hpp"
#include "resolab/resonances.hpp"
#include "resolab/scattering.hpp"

using namespace resolab;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::string cstr(cplx z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g%+.10gi", z.real() + 0.0, z.imag() + 0.0);
  return buf;
}

std::vector<cplx> livsic_zero_poles(const SMatrix& s) {
  std::vector<cplx> z;
  for (const auto& p : s.poles_lower)
    if (p.source.find("livsic_zero") != std::string::npos) z.push_back(p.location);
  return z;
}

// 1. Breit-Wigner normalization
void bw_normalization(Outcome& o) {
  double worst_closed = 0.0, worst_quad = 0.0;
  for (const auto [c, a] : {std::pair{0.0, 1.0}, {1.0, 0.1}, {5.0, 0.01}}) {
    worst_closed = std::max(worst_closed, std::abs(bw_norm_closed({c, a}) - 1.0));
    const RatFun e = bw_amplitude({c, a});
    const auto q = oracle::quad_real_line(
        [&](double l) {
          const cplx v = e(cplx{l + c, 0});
          return cplx{std::norm(v), 0};
        },
        1e-12, a);
    worst_quad = std::max(worst_quad, std::abs(q.value - 1.0));
  }
  o.detail << "closed |N-1|=" << sci(worst_closed) << " quadrature |N-1|=" << sci(worst_quad);
  o.require(worst_closed <= 4 * 2.2e-16, "closed form");
  o.require(worst_quad <= 1e-8, "quadrature 1e-8");
}

// 2. survival amplitude
void survival(Outcome& o) {
  const BreitWigner bw{1.0, 0.1};
  const RatFun e = bw_amplitude(bw);
  double worst = 0.0;
  for (const double t : {0.5, 1.0, 5.0, 10.0}) {
    const auto q = oracle::quad_oscillatory([&](double l) { return cplx{std::norm(e(cplx{l, 0})), 0}; }, t, 1e-10);
    worst = std::max(worst, std::abs(q.value - survival_full(bw, t)));
  }
  double semigroup = 0.0;
  for (const double s : {0.5, 1.0, 5.0})
    for (const double t : {0.5, 1.0, 5.0, 10.0})
      semigroup = std::max(semigroup, std::abs(survival_full(bw, s) * survival_full(bw, t) - survival_full(bw, s + t)));
  o.detail << "max |quad - e^{-itζ}|=" << sci(worst) << " semigroup defect=" << sci(semigroup);
  o.require(worst <= 1e-6, "quadrature 1e-6");
  o.require(semigroup <= 1e-10, "semigroup 1e-10");
}

// 3. simple pole of S at i for the dim K = 1 model
void paper_pole(Outcome& o) {
  const SMatrix s = smatrix(builtin_model("paper-1d"));
  o.require(s.poles_upper.size() == 1, "exactly one upper pole");
  if (s.poles_upper.empty()) return;
  const PoleRecord& p = s.poles_upper[0];
  const double dist = std::abs(p.location - I);
  // independent check: contour residue of S around i
  const cplx res = oracle::contour_residue([&](cplx z) { return s.s.eval_unchecked(z)(0, 0); }, I, 0.25, 512);
  o.detail << "pole " << cstr(p.location) << ", |pole-i|=" << sci(dist) << " order=" << p.order << " |residue(contour)-A|=" << sci(std::abs(res - p.leading(0, 0)));
  o.require(dist <= 1e-8, "location 1e-8");
  o.require(p.order == 1, "simple");
  o.require(std::abs(res) > 1e-3 && std::abs(res - p.leading(0, 0)) <= 1e-8, "contour residue");
}

// 4. kernels of S(ζ̄)* and span{M(ζ)e}
void lemma(Outcome& o) {
  double worst = 0.0;
  int checked = 0;
  for (const char* name : {"oneD-gamma", "twoK-oneE"}) {
    const FriedrichsModel m = builtin_model(name);
    const SMatrix s = smatrix(m);
    for (const cplx z : livsic_zero_poles(s)) {
      const LemmaReport r = verify_lemma(m, z);
      ++checked;
      worst = std::max(worst, r.max_angle);
      o.require(r.verdict == "pass" && r.dim_ker_s == r.dim_span_k && r.dim_ker_s > 0, std::string(name) + " verdict");
    }
  }
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> re(-2.0, 2.0), im(-2.0, -0.1);
  const cplx zr{re(rng), im(rng)};
  const LemmaReport ctl = verify_lemma(builtin_model("twoK-oneE"), zr);
  o.detail << checked << " resonances, max angle=" << sci(worst) << ", random ζ verdict=" << ctl.verdict;
  o.require(checked == 5, "5 resonances");
  o.require(worst <= 1e-6, "angle 1e-6");
  o.require(ctl.verdict == "vacuous", "negative control");
}

// C(λ+iε) - C(λ-iε) by quadrature, Richardson-extrapolated to ε → 0
cplx plemelj_oracle(const RatFun& density, double lambda) {
  auto jump = [&](double eps) {
    return oracle::quad_real_line(
               [&](double u) {
                 return density.eval_unchecked(cplx{lambda + u, 0}) * cplx{0, -2 * eps} / (u * u + eps * eps);
               },
               1e-13, eps)
        .value;
  };
  std::vector<cplx> t;
  for (const double e : {0.04, 0.02, 0.01, 0.005}) t.push_back(jump(e));
  for (int k = 1; k < static_cast<int>(t.size()); ++k)
    for (int j = static_cast<int>(t.size()) - 1; j >= k; --j) {
      const double f = std::pow(2.0, k);
      t[j] = (f * t[j] - t[j - 1]) / (f - 1.0);
    }
  return t.back();
}

// 5. continuation, symmetry, Plemelj
void identities(Outcome& o) {
  double coef = 0.0, point = 0.0, plemelj = 0.0;
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (const auto& name : builtin_names()) {
    const FriedrichsModel m = builtin_model(name);
    const LivsicPair p = livsic_pair(m);
    coef = std::max({coef, continuation_defect(p), symmetry_coefficient_defect(p)});
    for (int k = 0; k < 20; ++k) {
      const cplx z{u(rng), u(rng)};
      const CMatrix lu = p.upper.eval_unchecked(z), ll = p.lower.eval_unchecked(z), j = p.jump.eval_unchecked(z);
      const double scale = 1.0 + lu.norm();
      point = std::max(point, (lu - ll - j).norm() / scale);
      point = std::max(point, livsic_symmetry_defect(p, z) / scale);
    }
    const RatMat gram = coupling_gram(m);
    for (const double lambda : {-1.3, 0.2, 2.1})
      for (int a = 0; a < gram.rows(); ++a)
        for (int b = 0; b < gram.cols(); ++b) {
          const cplx want = -2.0 * pi * I * gram(a, b)(cplx{lambda, 0});
          plemelj = std::max(plemelj, std::abs(plemelj_oracle(gram(a, b), lambda) - want));
        }
  }
  o.detail << "coefficient defect=" << sci(coef) << " pointwise=" << sci(point) << " Plemelj limit=" << sci(plemelj);
  o.require(coef <= 1e-9, "rational 1e-9");
  o.require(point <= 1e-12, "pointwise 1e-12");
  o.require(plemelj <= 1e-6, "Plemelj 1e-6");
}

// 6. unitarity
void unitarity(Outcome& o) {
  double worst = 0.0;
  for (const auto& name : builtin_names()) {
    const RatMat s = smatrix(builtin_model(name)).s;
    for (const double l : linspace(-50.0, 50.0, 1000)) worst = std::max(worst, unitarity_defect(s, l));
  }
  o.detail << "max ||S*S-I||=" << sci(worst) << " over " << builtin_names().size() << " builtins";
  o.require(worst <= 1e-8, "1e-8");
}

// 7. truncated Breit-Wigner decay is not exponential
void nogo(Outcome& o) {
  const BreitWigner bw{1.0, 0.05};
  const NoGoReport tail = nogo_report(bw, logspace(1e3, 1e4, 60));
  const double log10_ratio_end = tail.log10_ratio.back();
  double early = 0.0;
  for (const double t : linspace(0.0, 20.0, 201)) {
    const double p = std::exp(truncated_log_probability(bw, t));
    early = std::max(early, std::abs(p / std::exp(-2 * bw.alpha * t) - 1.0));
  }
  o.detail << "slope on [" << tail.fit_t_min << "," << tail.fit_t_max << "]=" << std::to_string(tail.tail_slope)
           << " log10 P(1e4)/e^{-2αt}=" << log10_ratio_end << " early max rel. dev.=" << early;
  o.require(std::abs(tail.tail_slope + 2.0) <= 0.2, "slope -2±0.2");
  o.require(log10_ratio_end > 6.0, "ratio > 1e6");
  o.require(early <= 0.1, "early 10%");
}

// 8. Breit-Wigner state on the grid is a Z(t) eigenvector
void grid_eigenvector(Outcome& o) {
  const GridSpec grid{200.0, std::size_t{1} << 16};
  double worst = 0.0;
  for (const double alpha : {0.1, 0.5}) {
    const BreitWigner bw{1.0, alpha};
    const GridFunction e = GridFunction::sample(bw_amplitude(bw), grid);
    for (const double t : {0.5, 1.0}) {
      const GridFunction z = characteristic_semigroup(t, e);
      worst = std::max(worst, (z - e * survival_full(bw, t)).norm() / e.norm());
    }
  }
  o.detail << "max ||Z(t)e - e^{-itζ}e||/||e||=" << sci(worst) << " (ζ=1-0.1i, 1-0.5i)";
  o.require(worst <= 1e-4, "1e-4");
}

// 9. eigenvectors of the truncated generator
void eigen(Outcome& o) {
  EigenOptions opt;
  opt.grid_check = false;
  double worst = 0.0;
  int cases = 0;
  {
    const FriedrichsModel m = builtin_model("oneD-gamma");
    const SMatrix s = smatrix(m);
    const SubspaceBases b = subspace_bases(m, s, 30);
    for (const cplx z : livsic_zero_poles(s)) {
      const CMatrix ns = null_space(s.s.eval_unchecked(std::conj(z)).adjoint(), 1e-8, 1.0);
      o.require(ns.cols() == 1, "S(conj ζ)* singular");
      if (ns.cols() == 0) continue;
      const EigenReport r = eigenvector_check(m, s, b, z, ns.col(0), opt);
      o.require(r.case_tag == "(i)(a)" && r.algebraic_condition, "case (i)(a)");
      worst = std::max(worst, r.max_orthogonality);
      ++cases;
    }
  }
  const FriedrichsModel m = builtin_model("twoK-oneE");
  const SMatrix s = smatrix(m);
  const SubspaceBases b = subspace_bases(m, s, 30);
  const CVector mi = m.coupling.eval_unchecked(I).col(0);
  CVector k0(2);
  k0 << -std::conj(mi(1)), std::conj(mi(0));
  k0.normalize();
  const EigenReport r = eigenvector_check(m, s, b, -I, k0, opt);
  o.require(r.case_tag == "(i)(b)" && r.algebraic_condition, "case (i)(b)");
  worst = std::max(worst, r.max_orthogonality);
  ++cases;
  const CVector generic = CVector::Ones(2) / std::sqrt(2.0);
  const EigenReport ctl = eigenvector_check(m, s, b, -I, generic, opt);
  o.detail << cases << " cases, max |<f,S·u>| over n<30=" << sci(worst) << ", generic k₀=" << sci(ctl.max_orthogonality);
  o.require(worst <= 1e-8, "orthogonality 1e-8");
  o.require(ctl.max_orthogonality >= 1e-3, "negative control");
}

// 10. resolvent constructions
void resolvent(Outcome& o) {
  auto g_from_resonance = [](const FriedrichsModel& m, const SMatrix& s) {
    const cplx mu = livsic_zero_poles(s).front();
    const CVector k = m.coupling.eval_unchecked(mu) * livsic_kernel(m, mu).col(0);
    RatMat g(m.dim_k, 1);
    for (int i = 0; i < m.dim_k; ++i) g(i, 0) = RatFun::pole_term(k(i), mu, 1);
    return g;
  };
  const FriedrichsModel p1 = builtin_model("paper-1d");
  const SMatrix sp = smatrix(p1);
  const ResolventReport rb = resolvent_construct(p1, sp, subspace_bases(p1, sp, 30), -I, g_from_resonance(p1, sp), "b");
  const FriedrichsModel tk = builtin_model("twoK-oneE");
  const SMatrix st = smatrix(tk);
  const cplx zeta{-0.5, -0.5};
  const ResolventReport ra = resolvent_construct(tk, st, subspace_bases(tk, st, 30), zeta, g_from_resonance(tk, st), "a");
  o.detail << "(ii)(b) paper-1d: cancel=" << sci(rb.pole_cancellation_residual) << " orth=" << sci(rb.max_orthogonality)
           << " σ_min(A)=" << sci(rb.a_min_sval) << "; (ii)(a) twoK-oneE: cancel=" << sci(ra.pole_cancellation_residual)
           << " orth=" << sci(ra.max_orthogonality) << " uniqueness=" << sci(ra.uniqueness_min_residual);
  o.require(rb.case_tag == "(ii)(b)" && rb.certificates_pass(), "paper-1d certificates");
  o.require(ra.case_tag == "(ii)(a)" && ra.certificates_pass(), "twoK-oneE certificates");
  o.require(ra.uniqueness_min_residual >= 1e-5, "uniqueness probe");
}

// 11. resonance finder audit
void audit(Outcome& o) {
  const std::vector<Region> regions{{-3, 3, -3, 0}, {0.5, 3, -3, 0}, {-3, 0.5, -1.5, 0}};
  int runs = 0, found = 0;
  for (const auto& name : builtin_names()) {
    const FriedrichsModel m = builtin_model(name);
    for (const Region& r : regions) {
      const ResonanceSearch s = find_resonances(m, r);
      ++runs;
      found += s.polished_count;
      o.require(s.audit_ok(), name + " region audit");
    }
  }
  o.detail << runs << " searches, " << found << " zeros, all counts matched";
}

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> all{
      {1, "Breit-Wigner normalization", 1, bw_normalization},
      {2, "survival amplitude", 5, survival},
      {3, "pole of S at i (paper-1d)", 1, paper_pole},
      {4, "kernel lemma", 5, lemma},
      {5, "continuation, symmetry, Plemelj", 5, identities},
      {6, "unitarity", 10, unitarity},
      {7, "non-exponential truncated decay", 30, nogo},
      {8, "grid semigroup eigenvector", 10, grid_eigenvector},
      {9, "eigenvectors of the truncated generator", 30, eigen},
      {10, "resolvent construction", 30, resolvent},
      {11, "resonance count audit", 10, audit},
  };
  int failed = 0;
  for (const Criterion& c : all) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) {
      o.pass = false;
      o.detail << " [over runtime limit]";
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %d (%s): %s (%.2f s, limit %.0f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                o.detail.str().c_str(), secs, c.limit_s);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "resolab/scattering.hpp"

namespace resolab {

/// Uniform grid λ_j = -Λ + j·2Λ/N, j = 0..N-1, N a power of two.
struct GridSpec {
  double half_width = 200.0;
  std::size_t n = std::size_t{1} << 16;
  double step() const { return 2.0 * half_width / static_cast<double>(n); }
  double lambda(std::size_t j) const { return -half_width + static_cast<double>(j) * step(); }
  void validate() const;
};

/// K-valued samples, component-major: values[c·N + j].
struct GridFunction {
  GridSpec grid;
  int dim = 1;
  std::vector<cplx> values;

  static GridFunction zeros(const GridSpec& grid, int dim);
  /// Samples a dim×1 rational column.
  static GridFunction sample(const RatMat& column, const GridSpec& grid);
  static GridFunction sample(const RatFun& f, const GridSpec& grid);

  cplx* component(int c) { return values.data() + static_cast<std::size_t>(c) * grid.n; }
  const cplx* component(int c) const { return values.data() + static_cast<std::size_t>(c) * grid.n; }

  double norm() const;
  cplx inner(const GridFunction& g) const;  // h Σ conj(f) g
  GridFunction operator-(const GridFunction& g) const;
  GridFunction operator+(const GridFunction& g) const;
  GridFunction operator*(cplx s) const;

  /// CSV with header lambda,re_0,im_0,...
  std::string csv() const;
};

/// Warning text when less than 99.99% of ||f||² lies in [-Λ/2, Λ/2].
std::optional<std::string> sampling_warning(const GridFunction& f);

/// Q₊ on the line: the slowly decaying part is fitted as a/(λ+i) + b/(λ-i)
/// from the endpoint samples and projected exactly; the remainder goes through
/// a discrete Hilbert transform, Q₊r = (r + iHr)/2.
GridFunction hardy_project(const GridFunction& f);

/// Exact orthogonal projection of the periodized samples onto nonnegative
/// frequencies (kernel e^{-isλ}). Idempotent and self-adjoint to rounding.
GridFunction spectral_project(const GridFunction& f);

/// Z(t) = Q₊ e^{-itλ} on H²₊ samples. Throws DegenerateInput for t < 0.
GridFunction characteristic_semigroup(double t, const GridFunction& f);

/// φ_n(λ) = π^{-1/2} (λ - i)^n / (λ + i)^{n+1}.
RatFun cayley_basis(int n);

/// ∫_R Σ_j conj(f_j) g_j dλ by residues, one component at a time, closing in
/// the half-plane with the lower maximal pole order. Throws NonIntegrable.
cplx rational_inner_product(const RatMat& f, const RatMat& g, const Tolerances& tol = default_tolerances());
cplx rational_inner_product(const RatFun& f, const RatFun& g, const Tolerances& tol = default_tolerances());

/// True iff every pole lies below -τ_real and every entry decays.
bool in_hardy_plus(const RatMat& f, const Tolerances& tol = default_tolerances());
/// True iff every pole lies above τ_real and every entry decays.
bool in_hardy_minus(const RatMat& f, const Tolerances& tol = default_tolerances());

struct SubspaceBases {
  Poly p;                          // prod (λ - η_j)^{g_j} over upper poles of S
  std::vector<Root> upper_poles;   // η_j with g_j
  int g = 0;
  int n_max = 0;
  RatFun prefactor;                // p(λ)/(λ+i)^g
  std::vector<RatMat> nplus;       // ordered by (n, κ)
  std::vector<RatMat> mplus;       // S·u
  std::vector<std::pair<int, int>> index;
  double max_mplus_pole_imag = 0.0;  // pole audit: must be < 0
  bool nplus_valid = false;
  bool mplus_valid = false;
};

/// Throws HypothesisViolation if S has upper poles and a condition fails.
SubspaceBases subspace_bases(const FriedrichsModel& m, const SMatrix& s, int n_max = 30,
                             const Tolerances& tol = default_tolerances());

/// max over the basis of |<f, S·u>|; `by_n` receives the maximum per n.
double max_orthogonality(const RatMat& f, const SubspaceBases& b, std::vector<double>* by_n = nullptr,
                         const Tolerances& tol = default_tolerances());

struct EigenReport {
  cplx zeta;
  CVector k0;
  std::string case_tag;  // "(i)(a)", "(i)(b)" or "none"
  bool zeta_is_pole = false;
  bool zeta_bar_is_pole = false;
  double condition_residual = 0.0;  // ||S(ζ̄)^*k₀|| or ||A^*k₀|| relative to ||k₀||
  bool algebraic_condition = false;
  double max_orthogonality = 0.0;
  std::vector<double> orthogonality_by_n;
  std::vector<std::pair<double, double>> semigroup_defects;  // (t, relative defect)
  bool orthogonal() const { return max_orthogonality <= 1e-8; }
};

struct EigenOptions {
  bool grid_check = true;
  GridSpec grid{};
  std::vector<double> times{0.5, 1.0};
};

/// f = k₀/(λ - ζ): pole-data case, algebraic condition, orthogonality to the
/// truncated M₊ basis and the grid semigroup defect. Throws DegenerateInput
/// for real ζ.
EigenReport eigenvector_check(const FriedrichsModel& m, const SMatrix& s, const SubspaceBases& b, cplx zeta,
                              const CVector& k0, const EigenOptions& opt = {},
                              const Tolerances& tol = default_tolerances());

struct ResolventReport {
  cplx zeta;
  std::string case_tag;  // "(ii)(a)" or "(ii)(b)"
  CVector k0;
  RatMat h;
  RatMat f;
  double tplus_certificate = 0.0;  // max |<g, S·u>|
  bool h_in_hardy_minus = false;
  bool f_in_hardy_plus = false;
  double pole_cancellation_residual = 0.0;  // ||h(ζ) - W(ζ)k₀||
  double max_orthogonality = 0.0;           // max |<f, S·u>|
  double uniqueness_min_residual = -1.0;    // case (a) only; -1 when not run
  cplx c_scalar{};                          // case (b)
  double a_min_sval = 0.0;                  // case (b), normalized A
  bool certificates_pass() const {
    return f_in_hardy_plus && h_in_hardy_minus && pole_cancellation_residual <= 1e-8 && max_orthogonality <= 1e-8;
  }
};

/// Solves (B₊ - ζ)f = g. `requested_case` is "a" or "b" (empty: from pole
/// data). Throws HypothesisViolation naming the violated hypothesis.
ResolventReport resolvent_construct(const FriedrichsModel& m, const SMatrix& s, const SubspaceBases& b, cplx zeta,
                                    const RatMat& g, const std::string& requested_case = "",
                                    const Tolerances& tol = default_tolerances());

/// W = S#·p#/(λ-i)^g, reduced.
RatMat resolvent_weight(const SMatrix& s, const SubspaceBases& b, const Tolerances& tol = default_tolerances());

}  // namespace resolab

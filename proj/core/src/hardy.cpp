#include "resolab/hardy.hpp"

#include <fftw3.h>

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

#include "resolab/errors.hpp"

namespace resolab {

void GridSpec::validate() const {
  if (!(half_width > 0)) throw DegenerateInput("grid half-width must be positive");
  if (n < 4 || (n & (n - 1)) != 0) throw DegenerateInput("grid size must be a power of two >= 4");
}

GridFunction GridFunction::zeros(const GridSpec& grid, int dim) {
  grid.validate();
  return {grid, dim, std::vector<cplx>(grid.n * static_cast<std::size_t>(dim))};
}

GridFunction GridFunction::sample(const RatMat& column, const GridSpec& grid) {
  if (column.cols() != 1) throw ShapeMismatch("grid sampling expects a column");
  GridFunction f = zeros(grid, column.rows());
  for (int c = 0; c < f.dim; ++c) {
    cplx* v = f.component(c);
    for (std::size_t j = 0; j < grid.n; ++j) v[j] = column(c, 0).eval_unchecked(grid.lambda(j));
  }
  return f;
}

GridFunction GridFunction::sample(const RatFun& r, const GridSpec& grid) { return sample(RatMat::scalar(r), grid); }

double GridFunction::norm() const {
  double s = 0.0;
  for (const cplx v : values) s += std::norm(v);
  return std::sqrt(grid.step() * s);
}

cplx GridFunction::inner(const GridFunction& g) const {
  if (g.values.size() != values.size()) throw ShapeMismatch("grid functions differ in shape");
  cplx s{};
  for (std::size_t k = 0; k < values.size(); ++k) s += std::conj(values[k]) * g.values[k];
  return grid.step() * s;
}

GridFunction GridFunction::operator-(const GridFunction& g) const {
  if (g.values.size() != values.size()) throw ShapeMismatch("grid functions differ in shape");
  GridFunction out = *this;
  for (std::size_t k = 0; k < values.size(); ++k) out.values[k] -= g.values[k];
  return out;
}

GridFunction GridFunction::operator+(const GridFunction& g) const {
  if (g.values.size() != values.size()) throw ShapeMismatch("grid functions differ in shape");
  GridFunction out = *this;
  for (std::size_t k = 0; k < values.size(); ++k) out.values[k] += g.values[k];
  return out;
}

GridFunction GridFunction::operator*(cplx s) const {
  GridFunction out = *this;
  for (auto& v : out.values) v *= s;
  return out;
}

std::string GridFunction::csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "lambda";
  for (int c = 0; c < dim; ++c) os << ",re_" << c << ",im_" << c;
  os << '\n';
  for (std::size_t j = 0; j < grid.n; ++j) {
    os << grid.lambda(j);
    for (int c = 0; c < dim; ++c) os << ',' << component(c)[j].real() << ',' << component(c)[j].imag();
    os << '\n';
  }
  return os.str();
}

std::optional<std::string> sampling_warning(const GridFunction& f) {
  double inside = 0.0, total = 0.0;
  for (int c = 0; c < f.dim; ++c)
    for (std::size_t j = 0; j < f.grid.n; ++j) {
      const double w = std::norm(f.component(c)[j]);
      total += w;
      if (std::abs(f.grid.lambda(j)) <= 0.5 * f.grid.half_width) inside += w;
    }
  if (total == 0.0 || inside >= (1.0 - 1e-4) * total) return std::nullopt;
  std::ostringstream os;
  os << "only " << 100.0 * inside / total << "% of the squared norm lies in [-Λ/2, Λ/2]; enlarge the grid";
  return os.str();
}

namespace {

struct FftwBuffer {
  explicit FftwBuffer(std::size_t n) : p(static_cast<cplx*>(fftw_malloc(sizeof(cplx) * n))), size(n) {
    if (!p) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(p); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  fftw_complex* raw() { return reinterpret_cast<fftw_complex*>(p); }
  cplx* p;
  std::size_t size;
};

// Forward/backward plans of one length plus the spectrum of the discrete
// Hilbert kernel (2/π)/m, m odd, laid out for linear convolution of length-n/2
// sequences.
class FftPlans {
 public:
  explicit FftPlans(std::size_t len) : len_(len), kernel_(len) {
    FftwBuffer tmp(len);
    forward_ = fftw_plan_dft_1d(static_cast<int>(len), tmp.raw(), tmp.raw(), FFTW_FORWARD, FFTW_ESTIMATE);
    backward_ = fftw_plan_dft_1d(static_cast<int>(len), tmp.raw(), tmp.raw(), FFTW_BACKWARD, FFTW_ESTIMATE);
    const std::size_t half = len / 2;
    for (std::size_t k = 0; k < len; ++k) kernel_.p[k] = 0.0;
    for (std::size_t m = 1; m < half; m += 2) {
      const double v = 2.0 / (pi * static_cast<double>(m));
      kernel_.p[m] = v;
      kernel_.p[len - m] = -v;
    }
    fftw_execute_dft(forward_, kernel_.raw(), kernel_.raw());
  }
  ~FftPlans() {
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(backward_);
  }
  FftPlans(const FftPlans&) = delete;
  FftPlans& operator=(const FftPlans&) = delete;

  void forward(FftwBuffer& b) const { fftw_execute_dft(forward_, b.raw(), b.raw()); }
  void backward(FftwBuffer& b) const { fftw_execute_dft(backward_, b.raw(), b.raw()); }
  const cplx* kernel() const { return kernel_.p; }
  std::size_t size() const { return len_; }

 private:
  std::size_t len_;
  FftwBuffer kernel_;
  fftw_plan forward_ = nullptr;
  fftw_plan backward_ = nullptr;
};

const FftPlans& plans(std::size_t len) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<FftPlans>> cache;
  std::lock_guard<std::mutex> lock(mu);  // planner calls are not thread-safe
  auto& slot = cache[len];
  if (!slot) slot = std::make_unique<FftPlans>(len);
  return *slot;
}

// discrete Hilbert transform of n samples, linear convolution
void hilbert(const cplx* in, cplx* out, std::size_t n) {
  const FftPlans& pl = plans(2 * n);
  FftwBuffer b(2 * n);
  for (std::size_t k = 0; k < n; ++k) b.p[k] = in[k];
  for (std::size_t k = n; k < 2 * n; ++k) b.p[k] = 0.0;
  pl.forward(b);
  for (std::size_t k = 0; k < 2 * n; ++k) b.p[k] *= pl.kernel()[k];
  pl.backward(b);
  const double scale = 1.0 / static_cast<double>(2 * n);
  for (std::size_t k = 0; k < n; ++k) out[k] = b.p[k] * scale;
}

struct TailSplit {
  cplx a, b;  // coefficients of 1/(λ+i) and 1/(λ-i)
  std::vector<cplx> rest;
};

TailSplit split_tail(const cplx* f, const GridSpec& g) {
  const double l0 = g.lambda(0), l1 = g.lambda(g.n - 1);
  const cplx p0 = 1.0 / cplx(l0, 1.0), m0 = 1.0 / cplx(l0, -1.0);
  const cplx p1 = 1.0 / cplx(l1, 1.0), m1 = 1.0 / cplx(l1, -1.0);
  const cplx det = p0 * m1 - m0 * p1;
  TailSplit s;
  s.a = (f[0] * m1 - m0 * f[g.n - 1]) / det;
  s.b = (p0 * f[g.n - 1] - f[0] * p1) / det;
  s.rest.resize(g.n);
  for (std::size_t j = 0; j < g.n; ++j) {
    const double l = g.lambda(j);
    s.rest[j] = f[j] - s.a / cplx(l, 1.0) - s.b / cplx(l, -1.0);
  }
  return s;
}

// Q₊ of a remainder that vanishes at the grid ends
void project_rest(const std::vector<cplx>& r, cplx* out) {
  std::vector<cplx> hr(r.size());
  hilbert(r.data(), hr.data(), r.size());
  for (std::size_t j = 0; j < r.size(); ++j) out[j] += 0.5 * (r[j] + I * hr[j]);
}

}  // namespace

GridFunction hardy_project(const GridFunction& f) {
  f.grid.validate();
  GridFunction out = GridFunction::zeros(f.grid, f.dim);
  for (int c = 0; c < f.dim; ++c) {
    const TailSplit s = split_tail(f.component(c), f.grid);
    cplx* o = out.component(c);
    for (std::size_t j = 0; j < f.grid.n; ++j) o[j] = s.a / cplx(f.grid.lambda(j), 1.0);
    project_rest(s.rest, o);
  }
  return out;
}

GridFunction spectral_project(const GridFunction& f) {
  f.grid.validate();
  const std::size_t n = f.grid.n;
  const FftPlans& pl = plans(n);
  GridFunction out = GridFunction::zeros(f.grid, f.dim);
  FftwBuffer b(n);
  for (int c = 0; c < f.dim; ++c) {
    std::copy(f.component(c), f.component(c) + n, b.p);
    pl.forward(b);
    // bins n/2..n-1 carry negative frequencies (Nyquist dropped)
    for (std::size_t k = n / 2; k < n; ++k) b.p[k] = 0.0;
    pl.backward(b);
    for (std::size_t j = 0; j < n; ++j) out.component(c)[j] = b.p[j] / static_cast<double>(n);
  }
  return out;
}

GridFunction characteristic_semigroup(double t, const GridFunction& f) {
  if (t < 0) throw DegenerateInput("the characteristic semigroup is defined for t >= 0 only");
  f.grid.validate();
  GridFunction out = GridFunction::zeros(f.grid, f.dim);
  for (int c = 0; c < f.dim; ++c) {
    TailSplit s = split_tail(f.component(c), f.grid);
    cplx* o = out.component(c);
    // 1/(λ+i) is an eigenvector (eigenvalue e^{-t}); 1/(λ-i) is annihilated
    for (std::size_t j = 0; j < f.grid.n; ++j) {
      const double l = f.grid.lambda(j);
      o[j] = s.a * std::exp(-t) / cplx(l, 1.0);
      s.rest[j] *= std::exp(cplx(0.0, -t * l));
    }
    GridFunction shifted = GridFunction::zeros(f.grid, 1);
    std::copy(s.rest.begin(), s.rest.end(), shifted.values.begin());
    const GridFunction q = hardy_project(shifted);
    for (std::size_t j = 0; j < f.grid.n; ++j) o[j] += q.values[j];
  }
  return out;
}

RatFun cayley_basis(int n) {
  if (n < 0) throw DegenerateInput("Cayley index must be nonnegative");
  return RatFun::from_factors(1.0 / std::sqrt(pi), std::vector<cplx>(static_cast<std::size_t>(n), I),
                              std::vector<cplx>(static_cast<std::size_t>(n) + 1, -I));
}

cplx rational_inner_product(const RatFun& f, const RatFun& g, const Tolerances& tol) {
  if (f.is_zero() || g.is_zero()) return {};
  const RatFun w = multiply(f.conj_flip(), g, tol);
  if (w.is_zero()) return {};
  if (w.degree() > -2) throw NonIntegrable("integrand does not decay like 1/λ²");
  const auto clusters = w.pole_clusters(tol);
  int up = 0, lo = 0;
  for (const Root& r : clusters) {
    if (std::abs(r.value.imag()) <= tol.real) throw NonIntegrable("real pole in the inner product");
    (r.value.imag() > 0 ? up : lo) = std::max(r.value.imag() > 0 ? up : lo, r.multiplicity);
  }
  const bool upper = up <= lo;
  cplx s{};
  for (const Root& r : clusters)
    if ((r.value.imag() > 0) == upper) s += residue(w, r.value, tol);
  return (upper ? 2.0 : -2.0) * pi * I * s;
}

cplx rational_inner_product(const RatMat& f, const RatMat& g, const Tolerances& tol) {
  if (f.rows() != g.rows() || f.cols() != g.cols()) throw ShapeMismatch("inner product shape mismatch");
  cplx s{};
  for (std::size_t k = 0; k < f.entries().size(); ++k)
    s += rational_inner_product(f.entries()[k], g.entries()[k], tol);
  return s;
}

namespace {

bool hardy_side(const RatMat& f, const Tolerances& tol, double sign) {
  for (const auto& e : f.entries()) {
    if (e.is_zero()) continue;
    if (e.degree() > -1) return false;
    for (const cplx p : e.poles())
      if (!(sign * p.imag() > tol.real)) return false;
  }
  return true;
}

bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

bool in_hardy_plus(const RatMat& f, const Tolerances& tol) { return hardy_side(f, tol, -1.0); }
bool in_hardy_minus(const RatMat& f, const Tolerances& tol) { return hardy_side(f, tol, +1.0); }

SubspaceBases subspace_bases(const FriedrichsModel& m, const SMatrix& s, int n_max, const Tolerances& tol) {
  if (n_max < 1) throw DegenerateInput("basis cutoff must be positive");
  if (!s.poles_upper.empty()) {
    const ConditionsReport c = theorem2_conditions(s);
    if (!c.all_pass()) {
      std::string what = "conditions failed:";
      if (!c.finitely_many_upper_poles) what += " (I)";
      if (!c.bounded) what += " (II)";
      if (!c.no_conjugate_pairs) what += " (III)";
      if (!c.has_lower_pole) what += " (IV)";
      throw HypothesisViolation(what);
    }
  }
  SubspaceBases b;
  b.n_max = n_max;
  std::vector<cplx> roots;
  for (const auto& p : s.poles_upper) {
    b.upper_poles.push_back({p.location, p.order});
    for (int k = 0; k < p.order; ++k) roots.push_back(p.location);
  }
  b.g = static_cast<int>(roots.size());
  b.p = Poly::from_roots(roots);
  b.prefactor = RatFun::from_factors(1.0, roots, std::vector<cplx>(static_cast<std::size_t>(b.g), -I), tol);
  b.nplus_valid = b.mplus_valid = true;
  b.max_mplus_pole_imag = -std::numeric_limits<double>::infinity();
  for (int n = 0; n < n_max; ++n) {
    const RatFun w = multiply(b.prefactor, cayley_basis(n), tol);
    for (int k = 0; k < m.dim_k; ++k) {
      RatMat u(m.dim_k, 1);
      u(k, 0) = w;
      RatMat su = s.s * u;
      b.nplus_valid = b.nplus_valid && in_hardy_plus(u, tol);
      b.mplus_valid = b.mplus_valid && in_hardy_plus(su, tol);
      for (const auto& e : su.entries())
        for (const cplx p : e.poles()) b.max_mplus_pole_imag = std::max(b.max_mplus_pole_imag, p.imag());
      b.nplus.push_back(std::move(u));
      b.mplus.push_back(std::move(su));
      b.index.emplace_back(n, k);
    }
  }
  return b;
}

double max_orthogonality(const RatMat& f, const SubspaceBases& b, std::vector<double>* by_n, const Tolerances& tol) {
  double worst = 0.0;
  if (by_n) by_n->assign(static_cast<std::size_t>(b.n_max), 0.0);
  for (std::size_t k = 0; k < b.mplus.size(); ++k) {
    const double v = std::abs(rational_inner_product(f, b.mplus[k], tol));
    worst = std::max(worst, v);
    if (by_n) {
      auto& slot = (*by_n)[static_cast<std::size_t>(b.index[k].first)];
      slot = std::max(slot, v);
    }
  }
  return worst;
}

namespace {

RatMat vector_over(const CVector& k, cplx zeta) {
  RatMat f(static_cast<int>(k.size()), 1);
  for (Eigen::Index i = 0; i < k.size(); ++i) f(static_cast<int>(i), 0) = RatFun::pole_term(k(i), zeta, 1);
  return f;
}

struct NormalizedLeading {
  CMatrix a;  // unit max-magnitude entry
  cplx c;     // (S p)(η) = c A
};

NormalizedLeading normalized_leading(const SMatrix& s, const SubspaceBases& b, cplx eta, const Tolerances& tol) {
  const PoleRecord rec = leading_coefficient(s, eta, tol);
  Eigen::Index r = 0, c = 0;
  rec.leading.cwiseAbs().maxCoeff(&r, &c);
  const cplx piv = rec.leading(r, c);
  NormalizedLeading out{rec.leading / piv, piv};
  for (const Root& q : b.upper_poles)
    if (!near(q.value, rec.location, tol.cluster)) out.c *= std::pow(rec.location - q.value, q.multiplicity);
  return out;
}

}  // namespace

EigenReport eigenvector_check(const FriedrichsModel& m, const SMatrix& s, const SubspaceBases& b, cplx zeta,
                              const CVector& k0, const EigenOptions& opt, const Tolerances& tol) {
  if (std::abs(zeta.imag()) <= tol.real) throw DegenerateInput("ζ lies on the real axis");
  if (k0.size() != m.dim_k) throw ShapeMismatch("k₀ must have dim_k entries");
  EigenReport rep;
  rep.zeta = zeta;
  rep.k0 = k0;
  const cplx zb = std::conj(zeta);
  rep.zeta_is_pole = find_pole(s, zeta, tol) != nullptr;
  rep.zeta_bar_is_pole = find_pole(s, zb, tol) != nullptr;
  const double nk = std::max(k0.norm(), std::numeric_limits<double>::min());
  if (rep.zeta_bar_is_pole) {
    rep.case_tag = "(i)(b)";
    const NormalizedLeading a = normalized_leading(s, b, zb, tol);
    rep.condition_residual = (a.a.adjoint() * k0).norm() / nk;
  } else {
    rep.case_tag = rep.zeta_is_pole ? "(i)(a)" : "none";
    rep.condition_residual = (s.s.eval(zb, tol).adjoint() * k0).norm() / nk;
  }
  rep.algebraic_condition = k0.norm() > 0 && rep.condition_residual <= 1e-8;

  const RatMat f = vector_over(k0, zeta);
  rep.max_orthogonality = max_orthogonality(f, b, &rep.orthogonality_by_n, tol);

  if (opt.grid_check && zeta.imag() < 0) {
    const GridFunction fg = GridFunction::sample(f, opt.grid);
    const double nf = fg.norm();
    for (const double t : opt.times) {
      const GridFunction zt = characteristic_semigroup(t, fg);
      const double d = (zt - fg * std::exp(-I * t * zeta)).norm();
      rep.semigroup_defects.emplace_back(t, nf > 0 ? d / nf : d);
    }
  }
  return rep;
}

RatMat resolvent_weight(const SMatrix& s, const SubspaceBases& b, const Tolerances& tol) {
  std::vector<cplx> zeros;
  for (const Root& q : b.upper_poles)
    for (int k = 0; k < q.multiplicity; ++k) zeros.push_back(std::conj(q.value));
  const RatFun scal = RatFun::from_factors(1.0, zeros, std::vector<cplx>(static_cast<std::size_t>(b.g), I), tol);
  const RatMat sf = s.s.conj_flip();
  RatMat w(sf.rows(), sf.cols());
  for (int i = 0; i < sf.rows(); ++i)
    for (int j = 0; j < sf.cols(); ++j) w(i, j) = multiply(sf(i, j), scal, tol);
  return w;
}

ResolventReport resolvent_construct(const FriedrichsModel& m, const SMatrix& s, const SubspaceBases& b, cplx zeta,
                                    const RatMat& g, const std::string& requested_case, const Tolerances& tol) {
  if (!(zeta.imag() < -tol.real)) throw DegenerateInput("ζ must lie in the lower half-plane");
  if (g.rows() != m.dim_k || g.cols() != 1) throw ShapeMismatch("g must be a dim_k column");
  if (!in_hardy_plus(g, tol)) throw HypothesisViolation("g is not a rational element of H²₊");
  const cplx zb = std::conj(zeta);
  if (find_pole(s, zeta, tol))
    throw HypothesisViolation("ζ is a pole of S: ζ is an eigenvalue (case (i)(a)), the resolvent does not exist");
  const bool conj_pole = find_pole(s, zb, tol) != nullptr;
  const std::string detected = conj_pole ? "b" : "a";
  if (!requested_case.empty() && requested_case != detected) {
    if (requested_case == "a")
      throw HypothesisViolation("case (a) needs S(ζ̄) to exist, but ζ̄ is a pole of S");
    throw HypothesisViolation("case (b) needs ζ̄ to be a pole of S");
  }

  ResolventReport rep;
  rep.zeta = zeta;
  rep.case_tag = conj_pole ? "(ii)(b)" : "(ii)(a)";
  NormalizedLeading a;
  if (conj_pole) {
    a = normalized_leading(s, b, zb, tol);
    const auto sv = singular_values(a.a);
    rep.a_min_sval = sv.back();
    rep.c_scalar = a.c;
    if (sv.back() <= 1e-10 * sv.front())
      throw HypothesisViolation("A not invertible: ζ is an eigenvalue (case (i)(b))");
  }

  rep.tplus_certificate = max_orthogonality(g, b, nullptr, tol);
  if (rep.tplus_certificate > 1e-8) {
    std::ostringstream os;
    os << "g fails the T₊ certificate: max |<g, S·u>| = " << rep.tplus_certificate;
    throw HypothesisViolation(os.str());
  }

  const RatMat w = resolvent_weight(s, b, tol);
  rep.h = w * g;
  rep.h_in_hardy_minus = in_hardy_minus(rep.h, tol);
  const CVector hz = rep.h.eval(zeta, tol);
  const cplx zi = std::pow(zeta - I, b.g);
  if (conj_pole) {
    rep.k0 = zi * a.a.adjoint().fullPivLu().solve(hz) / std::conj(a.c);
  } else {
    const cplx pconj = std::conj(b.p(zb));
    rep.k0 = (zi / pconj) * (s.s.eval(zeta, tol) * hz);
  }
  const CMatrix wz = w.eval(zeta, tol);
  rep.pole_cancellation_residual = (hz - wz * rep.k0).norm();

  rep.f = RatMat(m.dim_k, 1);
  const RatFun inv = RatFun::pole_term(1.0, zeta, 1);
  for (int i = 0; i < m.dim_k; ++i) rep.f(i, 0) = multiply(g(i, 0) - RatFun(rep.k0(i)), inv, tol);
  rep.f_in_hardy_plus = in_hardy_plus(rep.f, tol);
  rep.max_orthogonality = max_orthogonality(rep.f, b, nullptr, tol);

  if (!conj_pole) {
    // k₀ is pinned down: any 1e-3 perturbation must show in the cancellation residual
    rep.uniqueness_min_residual = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m.dim_k; ++i)
      for (const cplx dir : {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)}) {
        CVector k = rep.k0;
        k(i) += 1e-3 * dir;
        rep.uniqueness_min_residual = std::min(rep.uniqueness_min_residual, (hz - wz * k).norm());
      }
  }
  return rep;
}

}  // namespace resolab

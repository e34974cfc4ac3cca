#include "resolab/decay.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "resolab/errors.hpp"
#include "resolab/oracle.hpp"

namespace resolab {

RatFun bw_amplitude(const BreitWigner& bw) {
  if (!(bw.alpha > 0.0)) throw DegenerateInput("Breit-Wigner half-width must be positive");
  return RatFun::pole_term(std::sqrt(bw.alpha / pi), bw.zeta(), 1);
}

double bw_norm_closed(const BreitWigner& bw) {
  const RatFun e = bw_amplitude(bw);
  const RatFun w = e.conj_flip() * e;
  // close in the upper half-plane: only conj ζ contributes
  return (2.0 * pi * I * residue(w, std::conj(bw.zeta()))).real();
}

cplx survival_full(const BreitWigner& bw, double t) {
  const cplx z = t >= 0 ? bw.zeta() : std::conj(bw.zeta());
  return std::exp(-I * t * z);
}

double half_line_mass(const BreitWigner& bw) { return (0.5 * pi + std::atan(bw.c / bw.alpha)) / pi; }

namespace {

// w(λ) = (α/π)/((λ - c)² + α²)
cplx lorentz(const BreitWigner& bw, cplx l) {
  const cplx d = l - bw.c;
  return (bw.alpha / pi) / (d * d + bw.alpha * bw.alpha);
}

// ∫_0^∞ e^{-ts} w(-is) ds = (1/t) ∫_0^∞ e^{-u} w(-iu/t) du
cplx rotated_integral(const BreitWigner& bw, double t) {
  const oracle::RealFn g = [&](double u) { return std::exp(-u) * lorentz(bw, cplx(0.0, -u / t)); };
  // e^{-60} is far below double resolution relative to the O(1) part
  const auto r = oracle::quad_interval(g, 0.0, 60.0, 1e-14 * std::max(1.0, std::abs(lorentz(bw, 0.0))), 5000);
  return r.value / t;
}

bool rotation_safe(const BreitWigner& bw) { return std::abs(bw.c) > 1e-3 * bw.alpha; }

}  // namespace

cplx truncated_survival(const BreitWigner& bw, double t) {
  if (!(bw.alpha > 0.0)) throw DegenerateInput("Breit-Wigner half-width must be positive");
  if (t < 0) throw DegenerateInput("truncated survival needs t >= 0");
  if (t == 0) return 1.0;
  const double n = half_line_mass(bw);
  if (!rotation_safe(bw)) {
    // pole of w(-is) sits on the rotated path; integrate on the real half-line
    const auto r = oracle::quad_oscillatory_half([&](double l) { return lorentz(bw, l); }, t, 1e-12);
    return r.value / n;
  }
  cplx v = -I * rotated_integral(bw, t);
  if (bw.c > 0) v += std::exp(-I * t * bw.zeta());
  return v / n;
}

double truncated_log_probability(const BreitWigner& bw, double t) {
  if (t == 0) return 0.0;
  const double n = half_line_mass(bw);
  if (!rotation_safe(bw) || bw.c < 0) return 2.0 * std::log(std::abs(truncated_survival(bw, t)));
  // A = (e^{-itζ} + R)/N with |e^{-itζ}| = e^{-αt}: factor out the larger magnitude
  const cplx r = -I * rotated_integral(bw, t);
  const double log_pole = -bw.alpha * t;
  const double log_r = std::log(std::abs(r));
  if (log_pole > log_r) {
    const cplx q = 1.0 + r * std::exp(bw.alpha * t + I * t * bw.c);
    return 2.0 * (log_pole + std::log(std::abs(q)) - std::log(n));
  }
  const cplx q = 1.0 + std::exp(-I * t * bw.zeta() - std::log(r));
  return 2.0 * (log_r + std::log(std::abs(q)) - std::log(n));
}

cplx truncated_survival_density(const RatFun& density, double t) {
  const oracle::RealFn f = [&](double l) { return density.eval_unchecked(l); };
  const double mass = oracle::quad_oscillatory_half(f, 0.0, 1e-11).value.real();
  if (!(mass > 0)) throw DegenerateInput("density has no mass on the half-line");
  return oracle::quad_oscillatory_half(f, t, 1e-11).value / mass;
}

NoGoReport nogo_report(const BreitWigner& bw, const std::vector<double>& t_grid) {
  if (t_grid.size() < 3) throw DegenerateInput("time grid needs at least three points");
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    if (t_grid[k] < 0) throw DegenerateInput("time grid must be nonnegative");
    if (k && !(t_grid[k] > t_grid[k - 1])) throw DegenerateInput("time grid must be increasing");
  }
  const double tmax = t_grid.back();
  double tmin_pos = 0.0;
  for (double t : t_grid)
    if (t > 0) {
      tmin_pos = t;
      break;
    }
  if (!(tmin_pos > 0) || tmax / tmin_pos < 10.0 * (1 - 1e-12))
    throw DegenerateInput("time grid spans less than one decade; tail fit impossible");

  NoGoReport rep;
  rep.bw = bw;
  rep.t = t_grid;
  rep.max_log10_ratio = -std::numeric_limits<double>::infinity();
  for (double t : t_grid) {
    rep.amplitude.push_back(truncated_survival(bw, t));
    const double lp = truncated_log_probability(bw, t);
    rep.probability.push_back(std::exp(lp));
    rep.log10_ratio.push_back((lp + 2.0 * bw.alpha * t) / std::log(10.0));
    rep.max_log10_ratio = std::max(rep.max_log10_ratio, rep.log10_ratio.back());
  }
  // least squares of log P against log t over the last decade
  rep.fit_t_max = tmax;
  rep.fit_t_min = tmax / 10.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  double prev_dev = -1.0;
  rep.deviation_monotone = true;
  for (std::size_t k = 0; k < t_grid.size(); ++k) {
    const double t = t_grid[k];
    if (t < rep.fit_t_min * (1 - 1e-12) || t <= 0) continue;
    const double x = std::log(t), y = rep.log10_ratio[k] * std::log(10.0) - 2.0 * bw.alpha * t;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
    const double dev = std::abs(rep.log10_ratio[k]);
    if (prev_dev >= 0 && !(dev > prev_dev)) rep.deviation_monotone = false;
    prev_dev = dev;
  }
  if (n < 2) throw DegenerateInput("fewer than two grid points in the fit decade");
  rep.tail_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const bool slope_ok = rep.tail_slope >= -2.5 && rep.tail_slope <= -1.5;
  rep.verdict = (slope_ok && rep.max_log10_ratio > 3.0) ? "non-exponential" : "inconclusive";
  return rep;
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// 10^x without overflow, as text
std::string pow10_text(double x) {
  if (std::abs(x) < 300) return fmt(std::pow(10.0, x));
  const double e = std::floor(x);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15ge%+.0f", std::pow(10.0, x - e), e);
  return buf;
}

}  // namespace

std::string nogo_csv(const NoGoReport& r) {
  std::ostringstream os;
  os << "t,ReA,ImA,P,exp(-2αt),ratio\n";
  for (std::size_t k = 0; k < r.t.size(); ++k) {
    os << fmt(r.t[k]) << ',' << fmt(r.amplitude[k].real()) << ',' << fmt(r.amplitude[k].imag()) << ','
       << fmt(r.probability[k]) << ',' << fmt(std::exp(-2.0 * r.bw.alpha * r.t[k])) << ','
       << pow10_text(r.log10_ratio[k]) << '\n';
  }
  return os.str();
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v;
  for (int k = 0; k < n; ++k) v.push_back(n == 1 ? a : a + (b - a) * k / (n - 1));
  return v;
}

std::vector<double> logspace(double a, double b, int n) {
  if (!(a > 0 && b > 0)) throw DegenerateInput("logspace endpoints must be positive");
  std::vector<double> v;
  for (int k = 0; k < n; ++k) v.push_back(n == 1 ? a : a * std::pow(b / a, static_cast<double>(k) / (n - 1)));
  return v;
}

}  // namespace resolab

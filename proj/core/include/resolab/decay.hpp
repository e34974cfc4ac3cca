#pragma once

#include <string>
#include <vector>

#include "resolab/ratfun.hpp"

namespace resolab {

/// Breit-Wigner line: ζ = c - iα.
struct BreitWigner {
  double c = 0.0;
  double alpha = 1.0;
  cplx zeta() const { return {c, -alpha}; }
};

/// e(λ) = (α/π)^{1/2} / (λ - ζ). Throws DegenerateInput for α <= 0.
RatFun bw_amplitude(const BreitWigner& bw);

/// ∫|e|² by residues (closed form).
double bw_norm_closed(const BreitWigner& bw);

/// e^{-itζ} for t >= 0, e^{-it conj ζ} for t < 0.
cplx survival_full(const BreitWigner& bw, double t);

/// ∫_0^∞ e^{-itλ}|φ(λ)|² dλ with φ ∝ e restricted to λ > 0 (normalized).
/// Contour rotation onto the negative imaginary axis; t >= 0.
cplx truncated_survival(const BreitWigner& bw, double t);

/// log |truncated_survival|², robust where the pole term underflows.
double truncated_log_probability(const BreitWigner& bw, double t);

/// Mass of |e|² on λ > 0.
double half_line_mass(const BreitWigner& bw);

/// Survival amplitude for a user supplied half-line density |φ|² (rational,
/// decaying like 1/λ²), normalized on λ > 0. Oracle quadrature based.
cplx truncated_survival_density(const RatFun& density, double t);

struct NoGoReport {
  BreitWigner bw;
  std::vector<double> t;
  std::vector<cplx> amplitude;
  std::vector<double> probability;
  std::vector<double> log10_ratio;  // log10(P(t) / e^{-2αt})
  double fit_t_min = 0.0, fit_t_max = 0.0;
  double tail_slope = 0.0;
  double max_log10_ratio = 0.0;
  bool deviation_monotone = false;  // |log P + 2αt| increasing over the fit range
  std::string verdict;              // "non-exponential" or "inconclusive"
};

/// t grid increasing and nonnegative; the fit uses points in [t_max/10, t_max].
/// Throws DegenerateInput if the grid spans less than one decade.
NoGoReport nogo_report(const BreitWigner& bw, const std::vector<double>& t_grid);

/// Columns t, ReA, ImA, P, exp(-2αt), ratio.
std::string nogo_csv(const NoGoReport& r);

std::vector<double> linspace(double a, double b, int n);
std::vector<double> logspace(double a, double b, int n);  // endpoints a, b > 0

}  // namespace resolab

#pragma once

#include <functional>

#include "resolab/tolerances.hpp"

/// Independent numerical oracles. Nothing here touches the rational-function
/// stack: integrands are plain callables.
namespace resolab::oracle {

using RealFn = std::function<cplx(double)>;
using ComplexFn = std::function<cplx(cplx)>;

struct QuadResult {
  cplx value;
  double error = 0.0;
  long evaluations = 0;
};

/// Adaptive Gauss-Kronrod (10/21) on [a, b]. Throws QuadratureError with the
/// best estimate when `max_intervals` is exhausted.
QuadResult quad_interval(const RealFn& f, double a, double b, double tol = 1e-9, int max_intervals = 20000);

/// Integral over R via λ = tan θ. `scale` stretches the map (λ = scale·tan θ)
/// to resolve features of width ~scale.
QuadResult quad_real_line(const RealFn& f, double tol = 1e-9, double scale = 1.0);

/// ∫_R e^{-itλ} f(λ) dλ for decaying f (at least 1/λ²).
QuadResult quad_oscillatory(const RealFn& f, double t, double tol = 1e-9);

/// ∫_0^∞ e^{-itλ} f(λ) dλ for f decaying at least like 1/λ².
QuadResult quad_oscillatory_half(const RealFn& f, double t, double tol = 1e-9);

/// Positively oriented rectangle.
struct Contour {
  cplx lower_left;
  cplx upper_right;
  int points_per_side = 256;
};

/// Winding number of f along the contour, by accumulated phase with adaptive
/// refinement between samples. Throws ContourError if |f| nearly vanishes on
/// the contour or the phase integral is not within 0.01 of an integer.
int argument_principle_count(const ComplexFn& f, const Contour& c);

/// (1/2πi)∮ f over the circle |z - center| = radius, trapezoidal rule.
cplx contour_residue(const ComplexFn& f, cplx center, double radius, int points = 256);

}  // namespace resolab::oracle

#pragma once

#include <complex>

namespace resolab {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr cplx I{0.0, 1.0};

/// Numerical tolerances shared by every module. All of them scale together
/// through `scaled()`; the CLI applies RESOLAB_TOL_SCALE this way.
struct Tolerances {
  double trim = 1e-12;     // trailing-coefficient trim, relative to max |c|
  double gcd = 1e-10;      // zero/pole cancellation distance
  double root = 1e-10;     // root residual, relative to the coefficient norm
  double cluster = 1e-7;   // roots closer than this are one multiple root
  double pole = 1e-9;      // evaluation refuses points this close to a pole
  double alg = 1e-10;      // rational identities, pointwise checks
  double real = 1e-9;      // distance from the real axis that counts as "on" it

  Tolerances scaled(double factor) const;
};

const Tolerances& default_tolerances();
/// Replaces the process-wide defaults. Call before any concurrent work starts.
void set_default_tolerances(const Tolerances& tol);

/// Number of zero/pole pairs that were cancelled although they were not
/// bitwise equal. Diagnostic only.
std::size_t near_cancellation_count();
void note_near_cancellation(cplx zero, cplx pole);

}  // namespace resolab

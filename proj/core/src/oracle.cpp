#include "resolab/oracle.hpp"

#include <array>
#include <cmath>
#include <queue>

#include "resolab/errors.hpp"

namespace resolab::oracle {

namespace {

// 21-point Kronrod nodes with embedded 10-point Gauss weights.
constexpr std::array<double, 11> xk{0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
                                    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
                                    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
                                    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
                                    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
                                    0.0};
constexpr std::array<double, 11> wk{0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
                                    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
                                    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
                                    0.123491976262065851077600525634722, 0.134709217311473325928054001771707,
                                    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
                                    0.149445554002916905664936468389821};
constexpr std::array<double, 5> wg{0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
                                   0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
                                   0.295524224714752870173892994651338};

struct Panel {
  double a, b;
  cplx value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk21(const RealFn& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  cplx k = wk[10] * f(c), g{};
  for (int j = 0; j < 10; ++j) {
    const double x = h * xk[static_cast<std::size_t>(j)];
    const cplx s = f(c - x) + f(c + x);
    k += wk[static_cast<std::size_t>(j)] * s;
    if (j % 2 == 1) g += wg[static_cast<std::size_t>(j / 2)] * s;
  }
  return {a, b, k * h, std::abs((k - g) * h)};
}

}  // namespace

QuadResult quad_interval(const RealFn& f, double a, double b, double tol, int max_intervals) {
  std::priority_queue<Panel> q;
  Panel first = gk21(f, a, b);
  cplx total = first.value;
  double err = first.error;
  q.push(first);
  long evals = 21;
  int count = 1;
  while (err > tol && count < max_intervals) {
    const Panel p = q.top();
    q.pop();
    const double m = 0.5 * (p.a + p.b);
    if (m <= p.a || m >= p.b) break;  // cannot split further
    const Panel l = gk21(f, p.a, m), r = gk21(f, m, p.b);
    evals += 42;
    total += l.value + r.value - p.value;
    err += l.error + r.error - p.error;
    q.push(l);
    q.push(r);
    ++count;
  }
  // recompute the error sum to shed accumulated rounding
  double e = 0.0;
  cplx v{};
  while (!q.empty()) {
    e += q.top().error;
    v += q.top().value;
    q.pop();
  }
  if (e > tol) throw QuadratureError("adaptive quadrature did not converge", v, e);
  return {v, e, evals};
}

QuadResult quad_real_line(const RealFn& f, double tol, double scale) {
  const RealFn g = [&](double th) {
    const double c = std::cos(th);
    if (c == 0.0) return cplx{};
    const double x = scale * std::tan(th);
    return f(x) * (scale / (c * c));
  };
  const double h = 0.5 * pi;
  return quad_interval(g, -h, h, tol, 50000);
}

namespace {

// Tail ∫_L^∞ e^{-itλ} f dλ by two integrations by parts; sign = +1 for [L, ∞),
// -1 for (-∞, L].
cplx oscillatory_tail(const RealFn& f, double t, double L, int sign) {
  const double d = 1e-3 * std::abs(L);
  const cplx fl = f(L);
  const cplx dfl = (f(L + d) - f(L - d)) / (2.0 * d);
  const cplx it{0.0, t};
  const cplx ph = std::exp(-it * L);
  // ∫_L^∞ e^{-itλ} f = e^{-itL}(f(L)/(it) + f'(L)/(it)^2 + ...)
  const cplx v = ph * (fl / it + dfl / (it * it));
  return sign > 0 ? v : -v;
}

QuadResult oscillatory_segment(const RealFn& f, double t, double a, double b, double tol) {
  const RealFn g = [&](double x) { return std::exp(cplx(0.0, -t * x)) * f(x); };
  const double period = 2.0 * pi / std::abs(t);
  const int n = std::max(1, static_cast<int>(std::ceil((b - a) / period)));
  QuadResult out{};
  const double w = (b - a) / n;
  for (int k = 0; k < n; ++k) {
    const double lo = a + k * w, hi = (k + 1 == n) ? b : a + (k + 1) * w;
    QuadResult r;
    try {
      r = quad_interval(g, lo, hi, tol / n, 200);
    } catch (const QuadratureError& e) {
      r = {e.estimate(), e.error_estimate(), 0};
    }
    out.value += r.value;
    out.error += r.error;
    out.evaluations += r.evaluations;
  }
  if (out.error > 10.0 * tol) throw QuadratureError("oscillatory quadrature did not converge", out.value, out.error);
  return out;
}

}  // namespace

QuadResult quad_oscillatory(const RealFn& f, double t, double tol) {
  if (t == 0.0) return quad_real_line(f, tol);
  const double L = std::max(1000.0, 50.0 / std::abs(t));
  QuadResult r = oscillatory_segment(f, t, -L, L, tol);
  r.value += oscillatory_tail(f, t, L, +1) + oscillatory_tail(f, t, -L, -1);
  return r;
}

QuadResult quad_oscillatory_half(const RealFn& f, double t, double tol) {
  if (t == 0.0) {
    const RealFn g = [&](double th) {
      const double c = std::cos(th);
      if (c == 0.0) return cplx{};
      return f(std::tan(th)) / (c * c);
    };
    return quad_interval(g, 0.0, 0.5 * pi, tol, 50000);
  }
  const double L = std::max(1000.0, 50.0 / std::abs(t));
  QuadResult r = oscillatory_segment(f, t, 0.0, L, tol);
  r.value += oscillatory_tail(f, t, L, +1);
  return r;
}

namespace {

struct PhaseWalk {
  const ComplexFn& f;
  double floor;
  double total = 0.0;

  void segment(cplx a, cplx fa, cplx b, cplx fb, int depth) {
    const double d = std::arg(fb / fa);
    if (std::abs(d) < 0.25 * pi || depth > 40) {
      if (depth > 40) throw ContourError("phase refinement did not resolve contour segment");
      total += d;
      return;
    }
    const cplx m = 0.5 * (a + b);
    const cplx fm = f(m);
    check(fm, m);
    segment(a, fa, m, fm, depth + 1);
    segment(m, fm, b, fb, depth + 1);
  }
  void check(cplx v, cplx z) const {
    if (!(std::abs(v) > floor) || !std::isfinite(std::abs(v))) {
      (void)z;
      throw ContourError("contour passes too close to a zero or pole");
    }
  }
};

}  // namespace

int argument_principle_count(const ComplexFn& f, const Contour& c) {
  const cplx ll = c.lower_left, ur = c.upper_right;
  if (!(ur.real() > ll.real() && ur.imag() > ll.imag())) throw ContourError("degenerate rectangle");
  const std::array<cplx, 5> corners{ll, cplx(ur.real(), ll.imag()), ur, cplx(ll.real(), ur.imag()), ll};
  const int n = std::max(4, c.points_per_side);
  std::vector<cplx> pts;
  for (int s = 0; s < 4; ++s)
    for (int k = 0; k < n; ++k)
      pts.push_back(corners[static_cast<std::size_t>(s)] +
                    (corners[static_cast<std::size_t>(s) + 1] - corners[static_cast<std::size_t>(s)]) *
                        (static_cast<double>(k) / n));
  pts.push_back(ll);
  std::vector<cplx> vals(pts.size());
  double typical = 0.0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    vals[k] = f(pts[k]);
    typical = std::max(typical, std::abs(vals[k]));
  }
  PhaseWalk w{f, 1e-13 * typical};
  for (std::size_t k = 0; k < pts.size(); ++k) w.check(vals[k], pts[k]);
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) w.segment(pts[k], vals[k], pts[k + 1], vals[k + 1], 0);
  const double wind = w.total / (2.0 * pi);
  const double r = std::round(wind);
  if (std::abs(wind - r) > 0.01) throw ContourError("phase integral is not an integer");
  return static_cast<int>(r);
}

cplx contour_residue(const ComplexFn& f, cplx center, double radius, int points) {
  cplx acc{};
  for (int k = 0; k < points; ++k) {
    const cplx u = std::polar(1.0, 2.0 * pi * k / points);
    acc += f(center + radius * u) * (radius * u);
  }
  return acc / static_cast<double>(points);
}

}  // namespace resolab::oracle

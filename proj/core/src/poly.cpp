#include "resolab/poly.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "resolab/errors.hpp"

namespace resolab {

Poly::Poly(std::vector<cplx> coeffs, const Tolerances& tol) : c_(std::move(coeffs)) {
  double m = 0.0;
  for (const auto& c : c_) m = std::max(m, std::abs(c));
  if (m == 0.0) {
    c_.clear();
    return;
  }
  while (!c_.empty() && std::abs(c_.back()) <= tol.trim * m) c_.pop_back();
}

Poly Poly::constant(cplx c) { return c == cplx{} ? Poly{} : Poly(Raw{}, {c}); }

Poly Poly::from_roots(std::span<const cplx> roots, cplx lead) {
  if (lead == cplx{}) return {};
  std::vector<cplx> c{lead};
  c.reserve(roots.size() + 1);
  for (const cplx r : roots) {
    c.push_back(cplx{});
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return Poly(Raw{}, std::move(c));
}

double Poly::max_abs() const {
  double m = 0.0;
  for (const auto& c : c_) m = std::max(m, std::abs(c));
  return m;
}

cplx Poly::operator()(cplx z) const {
  cplx acc{};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double Poly::abs_scale(cplx z) const {
  const double az = std::abs(z);
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * az + std::abs(*it);
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<cplx> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
  return Poly(Raw{}, std::move(d));
}

Poly Poly::monic() const {
  if (c_.empty()) return {};
  std::vector<cplx> m(c_);
  const cplx l = c_.back();
  for (auto& c : m) c /= l;
  m.back() = 1.0;
  return Poly(Raw{}, std::move(m));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw DegenerateInput("division by the zero polynomial");
  if (degree() < d.degree()) return {Poly{}, *this};
  std::vector<cplx> r(c_);
  std::vector<cplx> q(static_cast<std::size_t>(degree() - d.degree() + 1));
  const int dd = d.degree();
  for (int k = degree() - dd; k >= 0; --k) {
    const cplx f = r[static_cast<std::size_t>(k + dd)] / d.c_.back();
    q[static_cast<std::size_t>(k)] = f;
    for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(k + j)] -= f * d.c_[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<cplx> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-1.0 * b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<cplx> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(Poly::Raw{}, std::move(c));
}

Poly operator*(cplx s, const Poly& a) {
  if (s == cplx{}) return {};
  std::vector<cplx> c(a.c_);
  for (auto& x : c) x *= s;
  return Poly(Poly::Raw{}, std::move(c));
}

std::vector<Root> cluster_points(std::span<const cplx> pts, double radius) {
  // single-linkage via union-find; sizes here are tiny
  const std::size_t n = pts.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double scale = std::max({1.0, std::abs(pts[i]), std::abs(pts[j])});
      if (std::abs(pts[i] - pts[j]) <= radius * scale) parent[find(i)] = find(j);
    }
  std::vector<Root> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = out.size();
      out.push_back({pts[i], 1});
    } else {
      Root& c = out[slot[r]];
      c.value += pts[i];
      ++c.multiplicity;
    }
  }
  for (auto& c : out) c.value /= static_cast<double>(c.multiplicity);
  return out;
}

std::vector<cplx> expand_roots(std::span<const Root> roots) {
  std::vector<cplx> out;
  for (const auto& r : roots) out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.value);
  return out;
}

std::vector<Root> poly_roots(const Poly& p, const Tolerances& tol) {
  if (p.is_zero()) throw DegenerateInput("poly_roots of the zero polynomial");
  const int n = p.degree();
  if (n == 0) return {};
  const auto& c = p.coeffs();
  std::vector<cplx> raw;
  if (n == 1) {
    raw.push_back(-c[0] / c[1]);
  } else {
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    for (int i = 0; i < n; ++i) raw.push_back(es.eigenvalues()(i));
  }
  const Poly dp = p.derivative();
  for (auto& z : raw) {
    for (int it = 0; it < 3; ++it) {
      const cplx f = p(z);
      const cplx d = dp(z);
      if (f == cplx{} || d == cplx{}) break;
      const cplx cand = z - f / d;
      if (!(std::abs(p(cand)) < std::abs(f))) break;
      z = cand;
    }
  }
  auto roots = cluster_points(raw, tol.cluster);
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return roots;
}

}  // namespace resolab

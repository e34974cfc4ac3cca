#include "resolab/ratmat.hpp"

#include <algorithm>
#include <cmath>

#include "resolab/errors.hpp"

namespace resolab {

RatMat::RatMat(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows * cols)) {
  if (rows <= 0 || cols <= 0) throw ShapeMismatch("matrix dimensions must be positive");
}

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = RatFun(1.0);
  return m;
}

RatMat RatMat::constant(const CMatrix& c) {
  RatMat m(static_cast<int>(c.rows()), static_cast<int>(c.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = RatFun(c(i, j));
  return m;
}

CMatrix RatMat::eval(cplx z, const Tolerances& tol) const {
  CMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).eval(z, tol);
  return out;
}

CMatrix RatMat::operator()(cplx z) const { return eval(z, default_tolerances()); }

CMatrix RatMat::eval_unchecked(cplx z) const {
  CMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).eval_unchecked(z);
  return out;
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMat RatMat::conj_flip() const {
  RatMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j).conj_flip();
  return t;
}

RatMat RatMat::column(int c) const {
  RatMat out(rows_, 1);
  for (int i = 0; i < rows_; ++i) out(i, 0) = (*this)(i, c);
  return out;
}

std::vector<Root> RatMat::pole_clusters(const Tolerances& tol) const {
  std::vector<Root> acc;
  for (const auto& e : e_) {
    for (const Root& r : e.pole_clusters(tol)) {
      auto it = std::find_if(acc.begin(), acc.end(), [&](const Root& a) {
        return std::abs(a.value - r.value) <= tol.cluster * std::max(1.0, std::abs(r.value));
      });
      if (it == acc.end())
        acc.push_back(r);
      else
        it->multiplicity = std::max(it->multiplicity, r.multiplicity);
    }
  }
  std::sort(acc.begin(), acc.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return acc;
}

RatMat operator+(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("matrix sum shape mismatch");
  RatMat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

RatMat operator-(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("matrix difference shape mismatch");
  RatMat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  if (a.cols() != b.rows()) throw ShapeMismatch("matrix product shape mismatch");
  RatMat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      RatFun acc;
      for (int k = 0; k < a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  return c;
}

RatMat operator*(const RatFun& s, const RatMat& a) {
  RatMat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

namespace {

RatMat minor_of(const RatMat& m, int row, int col) {
  RatMat out(m.rows() - 1, m.cols() - 1);
  for (int i = 0, oi = 0; i < m.rows(); ++i) {
    if (i == row) continue;
    for (int j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == col) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

}  // namespace

RatFun det(const RatMat& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  RatFun acc;
  for (int j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    RatFun term = m(0, j) * det(minor_of(m, 0, j));
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

RatMat mat_inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("inverse of a non-square matrix");
  const RatFun d = det(m);
  if (d.is_zero()) throw SingularMatrix("matrix function is identically singular");
  const int n = m.rows();
  if (n == 1) return RatMat::scalar(d.reciprocal());
  const RatFun inv_d = d.reciprocal();
  RatMat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatFun c = det(minor_of(m, i, j)) * inv_d;
      out(j, i) = ((i + j) % 2 == 0) ? c : -c;
    }
  return out;
}

RatMat cauchy_transform(const RatMat& r, Branch branch, const Tolerances& tol) {
  RatMat out(r.rows(), r.cols());
  const cplx factor = branch == Branch::upper ? -2.0 * pi * I : 2.0 * pi * I;
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) {
      const RatFun& e = r(i, j);
      if (e.is_zero()) continue;
      if (e.degree() > -2) throw NonIntegrable("entry does not decay like 1/l^2");
      for (const cplx p : e.poles())
        if (std::abs(p.imag()) <= tol.real) throw NonIntegrable("real pole");
      // only principal parts on the far side of the evaluation half-plane survive
      const PartialFractions pf = partial_fractions(e, tol);
      RatFun acc;
      for (const auto& part : pf.parts) {
        const bool keep = branch == Branch::upper ? part.pole.imag() < 0 : part.pole.imag() > 0;
        if (!keep) continue;
        for (std::size_t k = 0; k < part.coeffs.size(); ++k)
          acc = add(acc, RatFun::pole_term(factor * part.coeffs[k], part.pole, static_cast<int>(k) + 1), tol);
      }
      out(i, j) = acc;
    }
  return out;
}

std::vector<double> singular_values(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

PoleRecord laurent_leading(const RatMat& r, cplx eta, const Tolerances& tol) {
  PoleRecord rec;
  rec.location = eta;
  for (const auto& e : r.entries()) rec.order = std::max(rec.order, e.pole_order_at(eta, tol.cluster));
  if (rec.order == 0) throw HolomorphicPoint(eta);
  rec.leading = CMatrix::Zero(r.rows(), r.cols());
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) {
      int m = 0;
      const auto t = taylor_without_pole(r(i, j), eta, tol.cluster, 1, &m);
      if (m == rec.order) rec.leading(i, j) = t[0];
    }
  rec.leading_svals = singular_values(rec.leading);
  return rec;
}

double coefficient_defect(const RatMat& a, const RatMat& b, const Tolerances& tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("defect shape mismatch");
  double d = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    d = std::max(d, coefficient_defect(a.entries()[k], b.entries()[k], tol));
  return d;
}

}  // namespace resolab

#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracle_values.hpp"
#include "resolab/errors.hpp"
#include "resolab/ratfun.hpp"
#include "resolab/ratmat.hpp"

using namespace resolab;
namespace ov = oracle_values;

TEST_CASE("poly: roots of the oneD-gamma quadratic") {
  const Poly p({-(I + 0.1), I - 1.0, 1.0});
  const auto r = testing::root_values(poly_roots(p));
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0] - ov::gamma_root_0) <= 1e-12);
  CHECK(std::abs(r[1] - ov::gamma_root_1) <= 1e-12);
}

TEST_CASE("poly: clustered double root") {
  const std::vector<cplx> roots{cplx{0.5, -1.0}, cplx{0.5, -1.0}, 2.0};
  const auto r = poly_roots(Poly::from_roots(roots));
  REQUIRE(r.size() == 2);
  int total = 0;
  for (const auto& x : r) {
    total += x.multiplicity;
    if (x.multiplicity == 2) CHECK(std::abs(x.value - cplx{0.5, -1.0}) <= 1e-7);
  }
  CHECK(total == 3);
}

TEST_CASE("poly: trailing coefficients are trimmed and zero polynomial rejected") {
  const Poly p({1.0, 2.0, 1e-15});
  CHECK(p.degree() == 1);
  CHECK_THROWS_AS(poly_roots(Poly{}), DegenerateInput);
}

TEST_CASE("poly: divmod reconstructs") {
  const Poly a({1.0, cplx{0, 2}, 3.0, 1.0});
  const Poly d({cplx{0, 1}, 1.0});
  const auto [q, r] = a.divmod(d);
  const Poly back = q * d + r;
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) CHECK(std::abs(back.coeffs()[k] - a.coeffs()[k]) <= 1e-14);
}

TEST_CASE("ratfun: cancellation on construction") {
  const RatFun r = RatFun::from_factors(2.0, {I, 1.0}, {I, -I});
  CHECK(r.zeros().size() == 1);
  CHECK(r.poles().size() == 1);
  CHECK(std::abs(r(0.0) - 2.0 * (-1.0) / I) <= 1e-15);
}

TEST_CASE("ratfun: evaluation at a pole throws") {
  const RatFun r = RatFun::pole_term(1.0, -I, 1);
  CHECK_THROWS_AS(r(-I), PoleEvaluation);
  CHECK_NOTHROW(r(0.0));
}

TEST_CASE("ratfun: residues and partial fractions") {
  // 1/((z-i)(z+i)) has residue 1/(2i) at i
  const RatFun r = RatFun::from_factors(1.0, {}, {I, -I});
  CHECK(std::abs(residue(r, I) - 1.0 / (2.0 * I)) <= 1e-15);
  CHECK(std::abs(residue(r, -I) + 1.0 / (2.0 * I)) <= 1e-15);
  CHECK(residue(r, 3.0) == cplx{});

  // double pole: (z+1)/(z-2)^2 = 1/(z-2) + 3/(z-2)^2
  const RatFun q = RatFun::from_factors(1.0, {-1.0}, {2.0, 2.0});
  const PartialFractions pf = partial_fractions(q);
  REQUIRE(pf.parts.size() == 1);
  CHECK(std::abs(pf.parts[0].coeffs[0] - 1.0) <= 1e-12);
  CHECK(std::abs(pf.parts[0].coeffs[1] - 3.0) <= 1e-12);
  CHECK(coefficient_defect(from_partial_fractions(pf), q) <= 1e-12);
}

TEST_CASE("ratfun: field identities at random points") {
  std::mt19937 rng(7);
  std::normal_distribution<double> n;
  auto rc = [&] { return cplx{n(rng), n(rng)}; };
  const RatFun a = RatFun::from_factors(rc(), {rc()}, {rc(), rc()});
  const RatFun b = RatFun::from_factors(rc(), {rc(), rc()}, {rc()});
  const RatFun sum = a + b, prod = a * b, quot = a / b, diff = a - a;
  CHECK(diff.is_zero());
  for (int k = 0; k < 20; ++k) {
    const cplx z = 3.0 * rc();
    const cplx av = a(z), bv = b(z);
    CHECK(std::abs(sum(z) - (av + bv)) <= 1e-10 * (1 + std::abs(av) + std::abs(bv)));
    CHECK(std::abs(prod(z) - av * bv) <= 1e-10 * (1 + std::abs(av * bv)));
    CHECK(std::abs(quot(z) - av / bv) <= 1e-10 * (1 + std::abs(av / bv)));
  }
}

TEST_CASE("ratfun: conj_flip is the reflected adjoint") {
  const RatFun r = RatFun::from_factors(cplx{1, 2}, {cplx{0.3, 0.7}}, {-I, cplx{2, -3}});
  const RatFun f = r.conj_flip();
  for (const cplx z : {cplx{0.1, 0.2}, cplx{-1.5, 4.0}, cplx{3.0, -0.4}})
    CHECK(std::abs(f(z) - std::conj(r(std::conj(z)))) <= 1e-14);
}

TEST_CASE("ratmat: inverse and determinant") {
  RatMat m(2, 2);
  m(0, 0) = RatFun::monomial(1.0);
  m(0, 1) = RatFun::pole_term(0.5, -I, 1);
  m(1, 0) = RatFun::pole_term(0.5, -2.0 * I, 1);
  m(1, 1) = RatFun::monomial(-I);
  const RatMat inv = mat_inverse(m);
  const RatMat id = m * inv;
  CHECK(coefficient_defect(id, RatMat::identity(2)) <= 1e-10);
  const cplx z{0.4, 0.9};
  CHECK(std::abs(det(m)(z) - m(z).determinant()) <= 1e-12);
  CHECK_THROWS_AS(mat_inverse(RatMat(2, 2)), SingularMatrix);
}

TEST_CASE("ratmat: Cauchy transform of a Lorentzian matches quadrature") {
  // density (1/π)/(l²+1); C(2i) = ∫ density/(2i - l)
  const RatFun lorentz = RatFun::from_factors(1.0 / pi, {}, {I, -I});
  const RatMat cu = cauchy_transform(RatMat::scalar(lorentz), Branch::upper);
  CHECK(std::abs(cu(2.0 * I)(0, 0) - ov::cauchy_lorentz_at_2i) <= 1e-13);
  const RatFun l4 = RatFun::from_factors(1.0 / pi, {}, {2.0 * I, -2.0 * I});
  const RatMat c4 = cauchy_transform(RatMat::scalar(l4), Branch::upper);
  CHECK(std::abs(c4(2.0 * I)(0, 0) - ov::cauchy_lorentz4_at_2i) <= 1e-13);
  CHECK_THROWS_AS(cauchy_transform(RatMat::scalar(RatFun::pole_term(1.0, -I, 1)), Branch::upper), NonIntegrable);
}

TEST_CASE("ratmat: laurent leading coefficient") {
  RatMat m(1, 2);
  m(0, 0) = RatFun::from_factors(3.0, {}, {I, I});
  m(0, 1) = RatFun::pole_term(1.0, I, 1);
  const PoleRecord rec = laurent_leading(m, I);
  CHECK(rec.order == 2);
  CHECK(std::abs(rec.leading(0, 0) - 3.0) <= 1e-14);
  CHECK(rec.leading(0, 1) == cplx{});
  CHECK_THROWS_AS(laurent_leading(m, 0.0), HolomorphicPoint);
}

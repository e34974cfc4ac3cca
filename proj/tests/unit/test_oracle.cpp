#include <cmath>
#include <random>

#include "doctest.h"
#include "resolab/errors.hpp"
#include "resolab/livsic.hpp"
#include "resolab/oracle.hpp"

using namespace resolab;

TEST_CASE("oracle: Gauss-Kronrod on smooth integrands") {
  const auto q = oracle::quad_interval([](double x) { return cplx{std::exp(x), std::sin(x)}; }, 0.0, 1.0, 1e-13);
  CHECK(std::abs(q.value - cplx{std::exp(1.0) - 1.0, 1.0 - std::cos(1.0)}) <= 1e-13);
  CHECK(q.error <= 1e-12);
  const auto r = oracle::quad_real_line([](double x) { return 1.0 / (1.0 + x * x); }, 1e-12);
  CHECK(std::abs(r.value - pi) <= 1e-10);
}

TEST_CASE("oracle: interval budget exhausted") {
  CHECK_THROWS_AS(oracle::quad_interval([](double x) { return std::sin(1.0 / x); }, 1e-9, 1.0, 1e-15, 5), QuadratureError);
}

TEST_CASE("oracle: oscillatory Fourier integrals") {
  // ∫ e^{-itλ}/(λ²+1) = π e^{-|t|}
  for (const double t : {0.5, 3.0, 20.0}) {
    const auto q = oracle::quad_oscillatory([](double l) { return 1.0 / (l * l + 1.0); }, t, 1e-10);
    CHECK(std::abs(q.value - pi * std::exp(-t)) <= 1e-8);
  }
}

TEST_CASE("oracle: argument principle") {
  const oracle::Contour sq{cplx{-1, -1}, cplx{1, 1}};
  CHECK(oracle::argument_principle_count([](cplx z) { return z; }, sq) == 1);
  CHECK(oracle::argument_principle_count([](cplx z) { return 1.0 / z; }, sq) == -1);
  CHECK(oracle::argument_principle_count([](cplx z) { return z * z * (z - 0.5); }, sq) == 3);
  CHECK_THROWS_AS(oracle::argument_principle_count([](cplx z) { return z - 1.0; }, sq), ContourError);
}

TEST_CASE("oracle: contour residue") {
  const cplx r = oracle::contour_residue([](cplx z) { return std::exp(z) / (z - 0.2); }, 0.0, 1.0);
  CHECK(std::abs(r - std::exp(0.2)) <= 1e-12);
}

TEST_CASE("oracle: paired evaluations against the residue paths") {
  // Livšic upper branch at random points of C+, every builtin: 4 x 15 pairs
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> re(-3.0, 3.0), im(0.2, 3.0);
  int pairs = 0;
  for (const auto& name : builtin_names()) {
    const FriedrichsModel m = builtin_model(name);
    const RatMat lu = livsic_branch(m, Branch::upper);
    const RatMat gram = coupling_gram(m);
    for (int k = 0; k < 15; ++k) {
      const cplx z{re(rng), im(rng)};
      const auto q = oracle::quad_real_line(
          [&](double l) { return gram.eval_unchecked(cplx{l, 0})(0, 0) / (z - l); }, 1e-12);
      const cplx want = z - m.h_e(0, 0) - q.value;
      CHECK(std::abs(lu.eval_unchecked(z)(0, 0) - want) <= std::max(1e-9, 10 * q.error));
      ++pairs;
    }
  }
  CHECK(pairs >= 50);
}

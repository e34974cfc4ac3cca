#include "doctest.h"
#include "oracle_values.hpp"
#include "resolab/errors.hpp"
#include "resolab/resonances.hpp"

using namespace resolab;
namespace ov = oracle_values;

TEST_CASE("resonances: oneD-gamma quadratic") {
  const ResonanceSearch r = find_resonances(builtin_model("oneD-gamma"), Region{-2, 2, -2, 0});
  CHECK(r.audit_ok());
  CHECK(r.audit_count == 2);
  REQUIRE(r.resonances.size() == 2);
  for (const auto& x : r.resonances) {
    const bool hit = std::abs(x.zeta - ov::gamma_root_0) <= 1e-12 || std::abs(x.zeta - ov::gamma_root_1) <= 1e-12;
    CHECK(hit);
    CHECK(x.multiplicity == 1);
    CHECK(x.kernel_e.cols() == 1);
  }
}

TEST_CASE("resonances: twoK-oneE cubic") {
  const ResonanceSearch r = find_resonances(builtin_model("twoK-oneE"), Region{-3, 3, -3, 0});
  CHECK(r.audit_ok());
  REQUIRE(r.resonances.size() == 3);
  for (const cplx want : {ov::twok_root_0, ov::twok_root_1, ov::twok_root_2}) {
    bool hit = false;
    for (const auto& x : r.resonances) hit = hit || std::abs(x.zeta - want) <= 1e-11;
    CHECK(hit);
  }
}

TEST_CASE("resonances: sub-region holds a single zero") {
  const ResonanceSearch r = find_resonances(builtin_model("oneD-gamma"), Region{0.5, 1.5, -0.5, 0});
  CHECK(r.audit_ok());
  REQUIRE(r.resonances.size() == 1);
  CHECK(std::abs(r.resonances[0].zeta - ov::gamma_root_1) <= 1e-12);
}

TEST_CASE("lemma: kernels coincide at resonances") {
  for (const char* name : {"oneD-gamma", "twoK-oneE", "paper-1d"}) {
    const FriedrichsModel m = builtin_model(name);
    const ResonanceSearch r = find_resonances(m, Region{-3, 3, -3, 0});
    for (const auto& x : r.resonances) {
      const LemmaReport l = verify_lemma(m, x.zeta);
      INFO(name, " ", x.zeta.real(), " ", x.zeta.imag());
      CHECK(l.verdict == "pass");
      CHECK(l.dim_ker_s == l.dim_span_k);
      CHECK(l.max_angle <= 1e-6);
      CHECK(l.forward_residual <= 1e-8);
      CHECK(l.construction_residual <= 1e-8);
    }
  }
}

TEST_CASE("lemma: vacuous away from resonances") {
  const LemmaReport l = verify_lemma(builtin_model("oneD-gamma"), cplx{0.37, -1.41});
  CHECK(l.verdict == "vacuous");
  CHECK(l.dim_ker_s == 0);
  CHECK(l.dim_span_k == 0);
}

TEST_CASE("lemma: conjugate pole rejected") {
  CHECK_THROWS_AS(verify_lemma(builtin_model("conjugate-pair"), -I), ConjugatePole);
}

TEST_CASE("linear algebra helpers") {
  CMatrix a(2, 2);
  a << 1, 2, 2, 4;
  const CMatrix n = null_space(a, 1e-10);
  REQUIRE(n.cols() == 1);
  CHECK((a * n).norm() <= 1e-14);
  CHECK(range_basis(a, 1e-10).cols() == 1);
  CMatrix e1 = CMatrix::Zero(2, 1), e2 = CMatrix::Zero(2, 1);
  e1(0, 0) = 1;
  e2(1, 0) = 1;
  CHECK(max_principal_angle(e1, e1) <= 1e-15);
  CHECK(max_principal_angle(e1, e2) == doctest::Approx(pi / 2));
  CHECK_THROWS_AS(livsic_kernel(builtin_model("oneD-gamma"), cplx{0.37, -1.41}), NoNullVector);
}

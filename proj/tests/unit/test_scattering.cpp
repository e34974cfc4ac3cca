#include "doctest.h"
#include "oracle_values.hpp"
#include "resolab/errors.hpp"
#include "resolab/scattering.hpp"

using namespace resolab;
namespace ov = oracle_values;

TEST_CASE("scattering: paper-1d values and the pole at i") {
  const FriedrichsModel m = builtin_model("paper-1d");
  const SMatrix s = smatrix(m);
  CHECK(std::abs(s.s(0.0)(0, 0) - ov::p1d_s_at_0) <= 1e-13);
  CHECK(std::abs(s.s(cplx{2, -1})(0, 0) - ov::p1d_s_at_2m1i) <= 1e-13);
  REQUIRE(s.poles_upper.size() == 1);
  const PoleRecord& p = s.poles_upper[0];
  CHECK(std::abs(p.location - I) <= 1e-8);
  CHECK(p.order == 1);
  CHECK(std::abs(p.leading(0, 0) - ov::p1d_residue_at_i) <= 1e-12);
  CHECK(p.source == "coupling");
  REQUIRE(s.poles_lower.size() == 2);
  for (const auto& q : s.poles_lower) {
    const bool hit = std::abs(q.location - ov::p1d_root_0) <= 1e-10 || std::abs(q.location - ov::p1d_root_1) <= 1e-10;
    CHECK(hit);
  }
}

TEST_CASE("scattering: twoK-oneE leading coefficients are rank one") {
  const FriedrichsModel m = builtin_model("twoK-oneE");
  const SMatrix s = smatrix(m);
  const PoleRecord a = leading_coefficient(s, I);
  const PoleRecord b = leading_coefficient(s, 2.0 * I);
  const CMatrix ea{{ov::twok_lead_i_00, ov::twok_lead_i_01}, {ov::twok_lead_i_10, ov::twok_lead_i_11}};
  const CMatrix eb{{ov::twok_lead_2i_00, ov::twok_lead_2i_01}, {ov::twok_lead_2i_10, ov::twok_lead_2i_11}};
  CHECK((a.leading - ea).norm() <= 1e-12);
  CHECK((b.leading - eb).norm() <= 1e-12);
  CHECK(a.leading_svals[1] <= 1e-12);
  const CMatrix e5{{ov::twok_s_at_5_00, ov::twok_s_at_5_01}, {ov::twok_s_at_5_10, ov::twok_s_at_5_11}};
  CHECK((s.s(5.0) - e5).norm() <= 1e-13);
  CHECK_THROWS_AS(leading_coefficient(s, -I), HolomorphicPoint);
}

TEST_CASE("scattering: both assembly routes agree") {
  for (const auto& name : builtin_names()) {
    INFO(name);
    const FriedrichsModel m = builtin_model(name);
    CHECK(coefficient_defect(smatrix(m).s, smatrix_from_lower(m)) <= 1e-9);
  }
}

TEST_CASE("scattering: unitarity on the real line") {
  for (const auto& name : builtin_names()) {
    const FriedrichsModel m = builtin_model(name);
    const RatMat s = smatrix(m).s;
    double worst = 0.0;
    for (int k = 0; k <= 200; ++k) worst = std::max(worst, unitarity_defect(s, -50.0 + 0.5 * k));
    INFO(name);
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("scattering: pole-data conditions") {
  const ConditionsReport good = theorem2_conditions(builtin_model("twoK-oneE"));
  CHECK(good.all_pass());
  CHECK(good.upper_pole_count == 2);
  const ConditionsReport bad = theorem2_conditions(builtin_model("conjugate-pair"));
  CHECK_FALSE(bad.no_conjugate_pairs);
  REQUIRE_FALSE(bad.conjugate_pairs.empty());
  CHECK(std::abs(bad.conjugate_pairs[0].first - I) <= 1e-7);
  CHECK(std::abs(bad.conjugate_pairs[0].second + I) <= 1e-7);
}

TEST_CASE("scattering: weak coupling resonance tracks the embedded eigenvalue") {
  BuiltinParams bp;
  bp.gamma2 = 1e-4;
  const SMatrix s = smatrix(builtin_model("oneD-gamma", bp));
  bool found = false;
  for (const auto& q : s.poles_lower)
    if (std::abs(q.location - ov::weak_root_1) <= 1e-10) found = true;
  CHECK(found);
}

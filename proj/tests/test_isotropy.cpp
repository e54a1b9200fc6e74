#include <cmath>
#include <random>

#include "doctest.h"
#include "lagiso/error.hpp"
#include "lagiso/families.hpp"
#include "lagiso/isotropy.hpp"

using namespace lagiso;

namespace {

// cubic-symmetric tensor from its four independent components
SecondFundamental cubic_tensor(double c111, double c112, double c122,
                               double c222) {
  return SecondFundamental::from_coeffs(c112, c111, c122, c112, c222, c122);
}

}  // namespace

TEST_CASE("isotropy ratio on a diagonal tensor") {
  SecondFundamental h = SecondFundamental::from_coeffs(0, 2, 0, 0, -1, 0);
  // v = E1 + E2: h(v,v) = h11 + 2 h12 + h22, <v,v> = 2
  CHECK(isotropy_ratio(h, 1, 1) == doctest::Approx(-1));
  // scaling v leaves the ratio alone
  CHECK(isotropy_ratio(h, 2, 2) == doctest::Approx(-1));
  CHECK(isotropy_ratio(h, 1, 2) == doctest::Approx(-1));
  try {
    isotropy_ratio(h, 1, 0);  // <E1,E1> = 0
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NullVector);
  }
}

TEST_CASE("pseudo isotropy holds exactly for diagonal tensors") {
  for (double lam : {-2.0, 0.0, 0.7, 3.0}) {
    for (double mu : {-1.5, 0.4, 2.0}) {
      SecondFundamental h = SecondFundamental::from_coeffs(0, lam, 0, 0, mu, 0);
      PseudoIsotropyResult r = pseudo_isotropy_test(h);
      CHECK(r.pseudo_isotropic);
      REQUIRE(r.lambda_tilde.has_value());
      CHECK(*r.lambda_tilde == doctest::Approx(lam * mu / 2).epsilon(1e-12));
      CHECK(r.max_residual < 1e-14);
    }
  }
  // zero tensor
  PseudoIsotropyResult z = pseudo_isotropy_test(SecondFundamental{});
  CHECK(z.pseudo_isotropic);
  CHECK(*z.lambda_tilde == doctest::Approx(0));
}

TEST_CASE("pseudo isotropy fails for non-minimal tensors") {
  SecondFundamental t1 = cubic_tensor(1, 0, 1, 0);
  PseudoIsotropyResult r1 = pseudo_isotropy_test(t1);
  CHECK_FALSE(r1.pseudo_isotropic);
  CHECK_FALSE(r1.lambda_tilde.has_value());
  CHECK(r1.max_residual_raw >= 0.1 * t1.coeff_norm2());

  SecondFundamental t2 = cubic_tensor(0, 1, 0, 0);
  PseudoIsotropyResult r2 = pseudo_isotropy_test(t2);
  CHECK_FALSE(r2.pseudo_isotropic);
  CHECK(r2.max_residual_raw >= 0.1 * t2.coeff_norm2());
}

TEST_CASE("lightlike isotropy") {
  LightlikeIsotropyResult ok =
      lightlike_isotropy_test(cubic_tensor(1.5, 0, -0.5, 0));
  CHECK(ok.lightlike_isotropic);
  CHECK(ok.residual_e1 < 1e-14);
  CHECK(ok.residual_e2 < 1e-14);

  // h(E1,E1) = JE1 + JE2 has <.,.> = 2
  LightlikeIsotropyResult bad =
      lightlike_isotropy_test(SecondFundamental::from_coeffs(1, 1, 0, 0, 0, 0));
  CHECK_FALSE(bad.lightlike_isotropic);
  CHECK(bad.residual_e1 > 0.5);
}

TEST_CASE("pointwise classification") {
  for (double a : {0.5, 1.0, 2.0, 10.0}) {
    // h(E1,E1) along JE2: first kind
    CHECK(classify_point(cubic_tensor(a, 0, 0, 0)) == PointType::Type1);
    CHECK(classify_point(cubic_tensor(a, 0, a / 2, 0)) == PointType::Type1);
    CHECK(classify_point(cubic_tensor(0, 0, 0, a)) == PointType::Type1);
    // h(E1,E1) along JE1: second kind
    CHECK(classify_point(cubic_tensor(0, a, 0, 0)) == PointType::Type2);
    // vanishing diagonal
    CHECK(classify_point(cubic_tensor(0, 0, 0, 0)) == PointType::Minimal);
  }
  try {
    classify_point(SecondFundamental::from_coeffs(1, 1, 0, 0, 0, 0));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotLightlikeIsotropic);
  }
  CHECK(to_string(PointType::Minimal) == "minimal");
  CHECK(to_string(PointType::Type1) == "type1");
  CHECK(to_string(PointType::Type2) == "type2");
}

TEST_CASE("minimal and pseudo isotropic coincide on random cubic tensors") {
  // Lightlike isotropy constrains the cubic components pairwise: c111 c112 = 0
  // and c122 c222 = 0. The draws stay inside that variety.
  std::mt19937 gen(7041955);
  std::uniform_real_distribution<double> diag(-3.0, 3.0);
  std::uniform_real_distribution<double> offd(0.5, 2.5);
  auto sgn = [&](int bit) { return bit ? 1.0 : -1.0; };

  for (int k = 0; k < 200; ++k) {
    bool want_minimal = (k % 2 == 0);
    double c111 = 0, c112 = 0, c122 = 0, c222 = 0;
    if (want_minimal) {
      c111 = diag(gen);
      c222 = diag(gen);
    } else if (k % 4 == 1) {
      // diagonal along J E2 / J E1, mean curvature along J E1
      c111 = offd(gen) * sgn(k % 8 < 4);
      c122 = offd(gen) * sgn(k % 16 < 8);
    } else {
      // diagonal along J E1 / J E2, mean curvature along J E2
      c112 = offd(gen) * sgn(k % 8 < 4);
      c122 = offd(gen) * sgn(k % 16 < 8);
      c111 = 0;
      c222 = 0;
    }
    IsotropyVerdict v = evaluate_point(cubic_tensor(c111, c112, c122, c222));
    CHECK(v.lightlike_isotropic);
    CHECK(v.minimal == want_minimal);
    CHECK(v.pseudo_isotropic == want_minimal);
    CHECK(v.theorem_consistent);
    REQUIRE(v.point_type.has_value());
    if (want_minimal) {
      REQUIRE(v.lambda_tilde.has_value());
      CHECK(*v.lambda_tilde == doctest::Approx(c111 * c222 / 2).epsilon(1e-10));
      // zero mean curvature, but the diagonal only vanishes when both
      // components do: anything else lands in the first kind
      bool geodesic = std::abs(c111) < 1e-6 && std::abs(c222) < 1e-6;
      CHECK(*v.point_type ==
            (geodesic ? PointType::Minimal : PointType::Type1));
    } else if (k % 4 == 1) {
      CHECK(*v.point_type == PointType::Type1);
    } else {
      CHECK(*v.point_type == PointType::Type2);
    }
  }
}

TEST_CASE("verdicts on the concrete families") {
  // totally geodesic plane
  {
    Immersion imm = make_plane();
    Jet2 jet = eval_jet2(imm, 0.2, -0.4, JetScheme::Exact);
    NullFrame fr = null_frame(jet, induced_metric(imm.space, jet));
    IsotropyVerdict v =
        evaluate_point(second_fundamental(imm.space, jet, fr));
    CHECK(v.minimal);
    CHECK(v.pseudo_isotropic);
    CHECK(v.theorem_consistent);
    REQUIRE(v.point_type.has_value());
    CHECK(*v.point_type == PointType::Minimal);
    CHECK(v.residuals.at("mean_curvature") < 1e-12);
  }
  // ruled surface over (sin, cos): first kind everywhere
  {
    Immersion imm = make_type1_unit_wronskian(curve_sin(), curve_cos());
    Jet2 jet = eval_jet2(imm, 0.3, 0.2, JetScheme::Exact);
    NullFrame fr = null_frame(jet, induced_metric(imm.space, jet));
    IsotropyVerdict v =
        evaluate_point(second_fundamental(imm.space, jet, fr));
    CHECK_FALSE(v.minimal);
    CHECK_FALSE(v.pseudo_isotropic);
    CHECK(v.theorem_consistent);
    REQUIRE(v.point_type.has_value());
    CHECK(*v.point_type == PointType::Type1);
  }
  // flat ruled family: second kind everywhere
  {
    Immersion imm = make_type2_flat(1);
    Jet2 jet = eval_jet2(imm, 0.4, -0.3, JetScheme::Exact);
    NullFrame fr = null_frame(jet, induced_metric(imm.space, jet));
    IsotropyVerdict v =
        evaluate_point(second_fundamental(imm.space, jet, fr));
    CHECK_FALSE(v.pseudo_isotropic);
    CHECK(v.theorem_consistent);
    REQUIRE(v.point_type.has_value());
    CHECK(*v.point_type == PointType::Type2);
  }
  // curved-quotient family through its horizontal lift
  {
    Immersion imm = make_type2_cp(0.5);
    Jet2 jet = eval_jet2(imm, 0.4, -0.3, JetScheme::Exact);
    ProjectedGeometry pg = projected_geometry(imm.space, jet);
    IsotropyVerdict v = evaluate_point(pg.h);
    CHECK_FALSE(v.pseudo_isotropic);
    CHECK(v.theorem_consistent);
    REQUIRE(v.point_type.has_value());
    CHECK(*v.point_type == PointType::Type2);
  }
}

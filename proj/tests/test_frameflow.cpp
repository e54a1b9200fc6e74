#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "lagiso/error.hpp"
#include "lagiso/families.hpp"
#include "lagiso/frameflow.hpp"

using namespace lagiso;

namespace {

const double kPi = 3.14159265358979323846;

double traj_error(double c, double r, double step) {
  std::vector<OdeSample> traj = integrate_rk4(
      [c](double, const FrameState& y) { return type2_rhs(c, y); },
      closed_form(c, r, 0), 0, 2 * kPi, step);
  double worst = 0;
  for (const OdeSample& s : traj) {
    FrameState ref = closed_form(c, r, s.u);
    worst = std::max({worst, std::abs(s.y.lambda - ref.lambda),
                      std::abs(s.y.beta - ref.beta)});
  }
  return worst;
}

}  // namespace

TEST_CASE("structure equation right-hand side") {
  FrameState y{0.5, 2.0};
  FrameState d0 = type2_rhs(0, y);
  CHECK(d0.lambda == doctest::Approx(2.0));
  CHECK(d0.beta == doctest::Approx(-0.5));
  FrameState d1 = type2_rhs(1, y);
  CHECK(d1.beta == doctest::Approx(-1.5));
}

TEST_CASE("closed form solves the system and keeps its amplitude") {
  for (double c : {0.0, 1.0}) {
    for (double r : {0.0, 0.5, 1.0, 2.0}) {
      FrameState y0 = closed_form(c, r, 0);
      CHECK(y0.lambda == doctest::Approx(-c));
      CHECK(y0.beta == doctest::Approx(r));
      for (double u : {0.3, 1.7, 5.2}) {
        FrameState y = closed_form(c, r, u);
        CHECK(conserved_r(c, y) == doctest::Approx(r));
        // derivative of the closed form matches the rhs
        double h = 1e-6;
        FrameState yp = closed_form(c, r, u + h);
        FrameState ym = closed_form(c, r, u - h);
        FrameState rhs = type2_rhs(c, y);
        CHECK((yp.lambda - ym.lambda) / (2 * h) ==
              doctest::Approx(rhs.lambda).epsilon(1e-6));
        CHECK((yp.beta - ym.beta) / (2 * h) ==
              doctest::Approx(rhs.beta).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("fixed-step integration tracks the closed form") {
  for (double c : {0.0, 1.0})
    for (double r : {0.0, 0.5, 1.0, 2.0}) CHECK(traj_error(c, r, 1e-3) < 1e-8);

  // fourth order: halving the step cuts the error by about 16
  double ratio = traj_error(1, 2, 0.1) / traj_error(1, 2, 0.05);
  CHECK(ratio > 12);
  CHECK(ratio < 20);
}

TEST_CASE("integration grid lands on the endpoint") {
  auto rhs = [](double, const FrameState& y) { return type2_rhs(0, y); };
  std::vector<OdeSample> traj = integrate_rk4(rhs, {1, 0}, 0, 0.25, 0.1);
  REQUIRE(traj.size() == 4);
  CHECK(traj[0].u == doctest::Approx(0));
  CHECK(traj[1].u == doctest::Approx(0.1));
  CHECK(traj[2].u == doctest::Approx(0.2));
  CHECK(traj[3].u == doctest::Approx(0.25));
}

TEST_CASE("integration guards") {
  auto rhs = [](double, const FrameState& y) { return type2_rhs(0, y); };
  CHECK_THROWS_AS(integrate_rk4(rhs, {1, 0}, 0, 1, 0), Error);
  CHECK_THROWS_AS(integrate_rk4(rhs, {1, 0}, 1, 0, 0.1), Error);
  try {
    integrate_rk4(
        [](double, const FrameState&) {
          return FrameState{std::numeric_limits<double>::quiet_NaN(), 0};
        },
        {1, 0}, 0, 1, 0.1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NumericalBlowup);
  }
}

TEST_CASE("characterizing systems vanish on their families") {
  Immersion t1 = make_type1_unit_wronskian(curve_sin(), curve_cos());
  PdeResiduals r1 = pde_residual(t1, {PdeSystemKind::Type1, 0}, 0.3, 0.2);
  CHECK(r1.max() < 1e-9);
  CHECK(r1.lambda_used == doctest::Approx(1).epsilon(1e-9));

  Immersion fl = make_type2_flat(1);
  PdeResiduals r2 = pde_residual(fl, {PdeSystemKind::Type2Flat, 1}, 0.4, -0.3);
  CHECK(r2.max() < 1e-9);

  Immersion cp = make_type2_cp(0.5);
  PdeResiduals r3 = pde_residual(cp, {PdeSystemKind::Type2CP, 0.5}, 0.4, -0.3);
  CHECK(r3.max() < 1e-9);

  // the flat system does not annihilate the plane
  CHECK(pde_residual(make_plane(), {PdeSystemKind::Type2Flat, 0}, 0.2, 0.1).max() >
        0.5);
}

TEST_CASE("system/ambient mismatches are rejected") {
  Immersion fl = make_type2_flat(1);
  Immersion cp = make_type2_cp(0.5);
  try {
    pde_residual(fl, {PdeSystemKind::Type2CP, 1}, 0.4, -0.3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SystemMismatch);
  }
  CHECK_THROWS_AS(pde_residual(cp, {PdeSystemKind::Type2Flat, 0.5}, 0.4, -0.3),
                  Error);
  CHECK_THROWS_AS(pde_residual(cp, {PdeSystemKind::Type1, 0}, 0.4, -0.3), Error);
}

TEST_CASE("phase fit recovers amplitude and offset") {
  double c = 1, r = 0.7, u0 = 0.3;
  std::vector<OdeSample> samples;
  for (int k = 0; k <= 40; ++k) {
    double u = k * (2 * kPi / 40);
    samples.push_back({u, FrameState{-c + r * std::sin(u + u0), 0}});
  }
  PhaseFit fit = fit_lambda_phase(c, r, samples);
  CHECK(fit.u0 == doctest::Approx(u0).epsilon(1e-10));
  CHECK(fit.amplitude == doctest::Approx(r).epsilon(1e-10));
  CHECK(fit.max_dev < 1e-12);

  // flat lambda: no phase to speak of, reported as zero
  std::vector<OdeSample> flat_samples;
  for (int k = 0; k <= 10; ++k)
    flat_samples.push_back({k * 0.1, FrameState{-c, 0}});
  PhaseFit none = fit_lambda_phase(c, 0, flat_samples);
  CHECK(none.u0 == doctest::Approx(0));
  CHECK(none.amplitude == doctest::Approx(0));

  CHECK_THROWS_AS(fit_lambda_phase(0, 1, {}), Error);
}

#include <cmath>

#include "doctest.h"
#include "lagiso/error.hpp"
#include "lagiso/families.hpp"
#include "lagiso/frameflow.hpp"

using namespace lagiso;

namespace {

constexpr double kRt2 = 0.70710678118654752;
const double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("curve parsing") {
  CurveFn p = parse_curve("poly:1,0,-2");
  CHECK(p.label == "poly:1,0,-2");
  CHECK(p.f(2) == doctest::Approx(-7));
  CHECK(p.d1(2) == doctest::Approx(-8));
  CHECK(p.d2(2) == doctest::Approx(-4));
  CHECK(parse_curve("sin").f(0.3) == doctest::Approx(std::sin(0.3)));
  CHECK(parse_curve("exp").d2(0.4) == doctest::Approx(std::exp(0.4)));
  CHECK_THROWS_AS(parse_curve("tan"), Error);
  CHECK_THROWS_AS(parse_curve("poly:1,abc"), Error);
  CHECK_THROWS_AS(parse_curve("poly:"), Error);
}

TEST_CASE("arclength reparameterization") {
  // unit Wronskian already: the map is the identity
  ParamMap id = arclength_reparam(curve_sin(), curve_cos(), -1, 1);
  CHECK_FALSE(id.swapped);
  CHECK(id.u_of_x(0.37) == doctest::Approx(0.37).epsilon(1e-10));
  CHECK(id.x_of_u(-0.4) == doctest::Approx(-0.4).epsilon(1e-10));
  CHECK(id.wron(0.5) == doctest::Approx(1));

  // constant Wronskian 2: the map doubles
  ParamMap twice = arclength_reparam(curve_poly({0, 2}), curve_poly({1}), -1, 1);
  CHECK_FALSE(twice.swapped);
  CHECK(twice.u_of_x(0.3) == doctest::Approx(0.6).epsilon(1e-10));
  CHECK(twice.x_of_u(0.6) == doctest::Approx(0.3).epsilon(1e-10));

  // negative Wronskian: curves are swapped so u increases with x
  ParamMap sw = arclength_reparam(curve_cos(), curve_sin(), -1, 1);
  CHECK(sw.swapped);
  CHECK(sw.wron(0.0) == doctest::Approx(1));

  // genuinely varying Wronskian e^x (1 - x), antiderivative e^x (2 - x) - 2
  ParamMap vr = arclength_reparam(curve_poly({0, 1}), curve_exp(), -1, 0.5);
  double exact = std::exp(0.4) * (2 - 0.4) - 2;
  CHECK(vr.u_of_x(0.4) == doctest::Approx(exact).epsilon(1e-8));
  for (double u : {-0.5, 0.0, 0.3}) {
    CHECK(vr.u_of_x(vr.x_of_u(u)) == doctest::Approx(u).epsilon(1e-10));
  }
}

TEST_CASE("ruled surfaces over degenerate curve pairs are rejected") {
  CHECK_THROWS_AS(make_type1(curve_exp(), curve_exp()), Error);
  try {
    make_type1_unit_wronskian(curve_exp(), curve_exp());
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateCurve);
  }
}

TEST_CASE("unit-Wronskian surface has the normalized metric") {
  Immersion imm =
      make_type1_unit_wronskian(curve_poly({0, 1}), curve_exp(), -1, 0.5);
  CHECK(imm.name == "type1");
  CHECK(imm.labels.at("alpha") == "poly:0,1");
  CHECK(imm.labels.at("beta") == "exp");
  for (double u : {-0.5, 0.0, 0.3}) {
    Jet2 jet = eval_jet2(imm, u, 0.2, JetScheme::Exact);
    FirstFundamental g = induced_metric(imm.space, jet);
    CHECK(std::abs(g.guu) < 1e-9);
    CHECK(g.guv == doctest::Approx(1).epsilon(1e-9));
    CHECK(std::abs(g.gvv) < 1e-9);
  }
}

TEST_CASE("flat ruled family") {
  CHECK_THROWS_AS(make_type2_flat(-1), Error);

  Immersion r0 = make_type2_flat(0);
  CHECK(r0.name == "type2-flat");
  CHECK(r0.params.at("r") == 0);
  Jet2 j0 = eval_jet2(r0, 0, 0, JetScheme::Exact);
  CHECK(euclid_norm(j0.f - CVec{Complex(0, kRt2), Complex(0, -kRt2)}) < 1e-12);
  CHECK(euclid_norm(j0.fu - CVec{Complex(-kRt2, 0), Complex(kRt2, 0)}) < 1e-12);
  CHECK(euclid_norm(j0.fv - CVec{Complex(kRt2, 0), Complex(kRt2, 0)}) < 1e-12);

  Immersion r1 = make_type2_flat(1);
  CHECK(r1.chart.u0 == doctest::Approx(-kPi));
  Jet2 j1 = eval_jet2(r1, 0.4, -0.3, JetScheme::Exact);
  FirstFundamental g = induced_metric(r1.space, j1);
  CHECK(std::abs(g.guu) < 1e-12);
  CHECK(g.guv == doctest::Approx(1).epsilon(1e-12));
  CHECK(g.gvv == doctest::Approx(-2 * std::sin(0.4)).epsilon(1e-12));

  // recovered frame function at the base point is r sin 0 = 0
  NullFrame fr = null_frame(j1, g);
  (void)fr;
  Jet2 jb = eval_jet2(r1, 0, 0.1, JetScheme::Exact);
  SecondFundamental hb =
      second_fundamental(r1.space, jb, null_frame(jb, induced_metric(r1.space, jb)));
  CHECK(std::abs(hb.q22) < 1e-10);
}

TEST_CASE("horizontal sphere lifts") {
  CHECK_THROWS_AS(make_type2_cp(-0.5), Error);

  for (double r : {0.0, 0.5, 1.0, 2.0}) {
    Immersion imm = make_type2_cp(r);
    CHECK(imm.name == "type2-cp");
    CHECK(imm.params.at("r") == r);
    for (double u : {-0.9, 0.0, 0.4}) {
      Jet2 jet = eval_jet2(imm, u, -0.3, JetScheme::Exact);
      CHECK(sphere_defect(imm.space, jet.f) < 1e-12);
      CHECK(horizontality_defect(imm.space, jet.f, jet.fu, jet.fv) < 1e-12);
      FirstFundamental g = induced_metric(imm.space, jet);
      double lambda = -1 + r * std::sin(u);
      CHECK(std::abs(g.guu) < 1e-12);
      CHECK(g.guv == doctest::Approx(1).epsilon(1e-10));
      CHECK(g.gvv == doctest::Approx(-2 * lambda).epsilon(1e-10));
    }

    // base point data
    Jet2 j0 = eval_jet2(imm, 0, 0, JetScheme::Exact);
    CHECK(euclid_norm(j0.f - CVec{Complex(0, 0), Complex(0, 0), Complex(1, 0)}) <
          1e-12);
    ProjectedGeometry pg = projected_geometry(imm.space, j0);
    CHECK(euclid_norm(pg.frame.e1 -
                      CVec{Complex(kRt2, 0), Complex(kRt2, 0), Complex(0, 0)}) <
          1e-12);
    CHECK(euclid_norm(pg.frame.e2 -
                      CVec{Complex(-kRt2, 0), Complex(kRt2, 0), Complex(0, 0)}) <
          1e-12);
    CHECK(pg.h.q22 == doctest::Approx(-1).epsilon(1e-10));

    // characterizing system, all three metric slots
    PdeResiduals pr = pde_residual(imm, {PdeSystemKind::Type2CP, r}, 0.4, -0.3);
    CHECK(pr.max() < 1e-9);
  }
}

TEST_CASE("projection guards") {
  Immersion cp = make_type2_cp(0.5);
  Jet2 jet = eval_jet2(cp, 0.4, -0.3, JetScheme::Exact);

  Jet2 off = jet;
  off.f = 1.1 * off.f;
  try {
    projected_geometry(cp.space, off);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotOnSphere);
  }

  Jet2 vert;
  vert.f = CVec{Complex(0, 0), Complex(0, 0), Complex(1, 0)};
  vert.fu = CVec{Complex(0, 0), Complex(0, 0), Complex(0, 1)};  // along i f
  vert.fv = CVec{Complex(1, 0), Complex(0, 0), Complex(0, 0)};
  vert.fuu = vert.fuv = vert.fvv = CVec(3);
  try {
    projected_geometry(cp.space, vert);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHorizontal);
  }

  Immersion fl = make_type2_flat(1);
  Jet2 fj = eval_jet2(fl, 0.4, -0.3, JetScheme::Exact);
  try {
    projected_geometry(fl.space, fj);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::WrongAmbient);
  }
}

TEST_CASE("plane is the trivial member") {
  Immersion imm = make_plane();
  CHECK(imm.name == "plane");
  Jet2 jet = eval_jet2(imm, 0.2, -0.4, JetScheme::Exact);
  CHECK(euclid_norm(jet.fuu) == 0);
  CHECK(euclid_norm(jet.fuv) == 0);
  CHECK(euclid_norm(jet.fvv) == 0);
}

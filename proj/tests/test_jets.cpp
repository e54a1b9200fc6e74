#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "doctest.h"
#include "lagiso/error.hpp"
#include "lagiso/families.hpp"
#include "lagiso/jets.hpp"

using namespace lagiso;

namespace {

double jet_gap(const Jet2& a, const Jet2& b) {
  return std::max({euclid_norm(a.f - b.f), euclid_norm(a.fu - b.fu),
                   euclid_norm(a.fv - b.fv), euclid_norm(a.fuu - b.fuu),
                   euclid_norm(a.fuv - b.fuv), euclid_norm(a.fvv - b.fvv)});
}

}  // namespace

TEST_CASE("finite differences reproduce the closed-form jet") {
  Immersion imm = make_type2_flat(1);
  Jet2 ex = eval_jet2(imm, 0.4, -0.3, JetScheme::Exact);
  Jet2 fd = eval_jet2(imm, 0.4, -0.3, JetScheme::FiniteDifference);
  CHECK(euclid_norm(ex.f - fd.f) < 1e-14);
  CHECK(jet_gap(ex, fd) < 1e-6);
}

TEST_CASE("difference error shrinks at second order") {
  Immersion imm = make_type2_flat(1);
  Jet2 ex = eval_jet2(imm, 0.4, -0.3, JetScheme::Exact);
  auto err = [&](double h) {
    return jet_gap(ex, eval_jet2(imm, 0.4, -0.3, JetScheme::FiniteDifference, h));
  };
  double ratio = err(2e-2) / err(1e-2);
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);
}

TEST_CASE("mixed partials of the closed forms commute") {
  double u = 0.4, v = -0.3, h = 1e-4;
  for (const Immersion& imm : {make_type2_flat(1), make_type2_cp(0.5)}) {
    CVec dfu_dv =
        (1.0 / (2 * h)) * (imm.exact_jet(u, v + h).fu - imm.exact_jet(u, v - h).fu);
    CVec dfv_du =
        (1.0 / (2 * h)) * (imm.exact_jet(u + h, v).fv - imm.exact_jet(u - h, v).fv);
    CHECK(euclid_norm(dfu_dv - dfv_du) < 1e-6);
    CHECK(euclid_norm(dfu_dv - imm.exact_jet(u, v).fuv) < 1e-6);
  }
}

TEST_CASE("chart guards") {
  Immersion imm = make_type2_flat(1);  // chart [-pi,pi] x [-1,1]
  // inside the chart but within 2h of the edge: FD refuses, exact does not
  CHECK_THROWS_AS(eval_jet2(imm, 0, -1 + 1e-6, JetScheme::FiniteDifference), Error);
  CHECK_NOTHROW(eval_jet2(imm, 0, -1 + 1e-6, JetScheme::Exact));
  try {
    eval_jet2(imm, 0, -1 + 1e-6, JetScheme::FiniteDifference);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfChart);
  }
  // fully outside
  CHECK_THROWS_AS(eval_jet2(imm, 4.0, 0, JetScheme::Exact), Error);
  // bad step
  try {
    eval_jet2(imm, 0, 0, JetScheme::FiniteDifference, -1e-4);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidParameter);
  }
}

TEST_CASE("missing closed form is reported as such") {
  Immersion imm;
  imm.space = flat_c21();
  imm.chart = {-1, 1, -1, 1};
  imm.name = "samples-only";
  imm.evaluate = [](double u, double v) {
    return CVec{Complex(u, v), Complex(v, u * u)};
  };
  try {
    eval_jet2(imm, 0, 0, JetScheme::Exact);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoExactJet);
  }
  CHECK_NOTHROW(eval_jet2(imm, 0, 0, JetScheme::FiniteDifference));
}

TEST_CASE("fd_validate passes honest jets and flags a wrong slot") {
  Immersion imm = make_type2_flat(1);
  std::vector<std::pair<double, double>> pts{{0.3, -0.2}, {0.5, 0.1}, {-0.7, 0.4}};

  VerificationReport ok = fd_validate(imm, pts);
  CHECK(ok.overall_pass());
  CHECK(ok.checks.size() == 6);
  for (const char* slot : {"f", "fu", "fv", "fuu", "fuv", "fvv"})
    CHECK(ok.find(std::string("fd_vs_exact_") + slot) != nullptr);

  // same surface, but the reported jet drops the mixed partial
  Immersion lying = imm;
  auto true_jet = imm.exact_jet;
  lying.exact_jet = [true_jet](double u, double v) {
    Jet2 j = true_jet(u, v);
    j.fuv = CVec(j.fuv.size());
    return j;
  };
  VerificationReport bad = fd_validate(lying, pts);
  CHECK_FALSE(bad.overall_pass());
  const CheckResult* c = bad.find("fd_vs_exact_fuv");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->pass);
  CHECK(c->max_residual > 1e-2);
  CHECK(c->witness.has_value());
  const CheckResult* good_slot = bad.find("fd_vs_exact_fu");
  REQUIRE(good_slot != nullptr);
  CHECK(good_slot->pass);
}

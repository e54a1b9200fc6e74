#include "lagiso/jets.hpp"

#include <cmath>

namespace lagiso {

namespace {

CVec fd_scale(const CVec& a, double s) { return Complex(s, 0) * a; }

}  // namespace

Jet2 eval_jet2(const Immersion& imm, double u, double v, JetScheme scheme,
               double h) {
  if (scheme == JetScheme::Exact) {
    if (!imm.has_exact_jet())
      fail(ErrorCode::NoExactJet,
           "immersion '" + imm.name + "' has no closed-form jet");
    if (!imm.chart.contains(u, v))
      fail(ErrorCode::OutOfChart, "point outside chart of '" + imm.name + "'");
    return imm.exact_jet(u, v);
  }

  if (!(h > 0)) fail(ErrorCode::InvalidParameter, "FD step must be positive");
  if (!imm.chart.contains(u, v, 2 * h))
    fail(ErrorCode::OutOfChart,
         "FD jet needs margin 2h inside the chart of '" + imm.name + "'");

  const auto& F = imm.evaluate;
  CVec c = F(u, v);
  CVec pu = F(u + h, v), mu = F(u - h, v);
  CVec pv = F(u, v + h), mv = F(u, v - h);
  CVec pp = F(u + h, v + h), pm = F(u + h, v - h);
  CVec mp = F(u - h, v + h), mm = F(u - h, v - h);

  Jet2 jet;
  jet.f = c;
  jet.fu = fd_scale(pu - mu, 1.0 / (2 * h));
  jet.fv = fd_scale(pv - mv, 1.0 / (2 * h));
  jet.fuu = fd_scale((pu - c) - (c - mu), 1.0 / (h * h));
  jet.fvv = fd_scale((pv - c) - (c - mv), 1.0 / (h * h));
  jet.fuv = fd_scale((pp - pm) - (mp - mm), 1.0 / (4 * h * h));
  return jet;
}

VerificationReport fd_validate(const Immersion& imm,
                               const std::vector<std::pair<double, double>>& points,
                               double h, double tol) {
  static const char* slot_names[6] = {"f", "fu", "fv", "fuu", "fuv", "fvv"};

  VerificationReport rep;
  rep.family = imm.name;
  rep.params = imm.params;
  rep.labels = imm.labels;
  rep.grid.nu = static_cast<int>(points.size());
  rep.grid.nv = 1;
  if (!points.empty()) {
    rep.grid.u0 = rep.grid.u1 = points.front().first;
    rep.grid.v0 = rep.grid.v1 = points.front().second;
    for (const auto& [u, v] : points) {
      rep.grid.u0 = std::min(rep.grid.u0, u);
      rep.grid.u1 = std::max(rep.grid.u1, u);
      rep.grid.v0 = std::min(rep.grid.v0, v);
      rep.grid.v1 = std::max(rep.grid.v1, v);
    }
  }

  double worst[6] = {0, 0, 0, 0, 0, 0};
  std::pair<double, double> where[6]{};
  for (const auto& [u, v] : points) {
    Jet2 exact = eval_jet2(imm, u, v, JetScheme::Exact);
    Jet2 fd = eval_jet2(imm, u, v, JetScheme::FiniteDifference, h);
    const CVec* ex[6] = {&exact.f, &exact.fu, &exact.fv,
                         &exact.fuu, &exact.fuv, &exact.fvv};
    const CVec* ap[6] = {&fd.f, &fd.fu, &fd.fv, &fd.fuu, &fd.fuv, &fd.fvv};
    for (int s = 0; s < 6; ++s) {
      double dev = euclid_norm(*ex[s] - *ap[s]);
      if (dev > worst[s]) {
        worst[s] = dev;
        where[s] = {u, v};
      }
    }
  }

  for (int s = 0; s < 6; ++s) {
    CheckResult c;
    c.name = std::string("fd_vs_exact_") + slot_names[s];
    c.max_residual = worst[s];
    c.tol = tol;
    c.pass = worst[s] <= tol;
    if (!points.empty()) c.witness = where[s];
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace lagiso

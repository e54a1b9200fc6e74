#include "lagiso/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <vector>

#include "lagiso/error.hpp"

namespace lagiso {

namespace {

struct MaxTrack {
  double value = 0;
  double u = 0, v = 0;
  bool any = false;
  void update(double r, double uu, double vv) {
    if (!any || r > value) {
      value = r;
      u = uu;
      v = vv;
    }
    any = true;
  }
};

CheckResult make_check(const std::string& name, const MaxTrack& t, double tol) {
  CheckResult c;
  c.name = name;
  c.max_residual = t.value;
  c.tol = tol;
  c.pass = t.value <= tol;
  if (t.any) c.witness = std::make_pair(t.u, t.v);
  return c;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out;
  if (n <= 1) {
    out.push_back((a + b) / 2);
    return out;
  }
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(a + (b - a) * i / (n - 1));
  return out;
}

constexpr double kDiscFloor = 1e-9;

}  // namespace

FamilyInstance plane_instance() {
  FamilyInstance fam;
  fam.imm = make_plane();
  fam.expected_type = PointType::Minimal;
  return fam;
}

FamilyInstance type1_instance(const CurveFn& alpha, const CurveFn& beta) {
  FamilyInstance fam;
  fam.imm = make_type1_unit_wronskian(alpha, beta);
  fam.expected_type = PointType::Type1;
  fam.system = PdeSystem{PdeSystemKind::Type1, 0};
  return fam;
}

FamilyInstance type2_flat_instance(double r) {
  FamilyInstance fam;
  fam.imm = make_type2_flat(r);
  fam.expected_type = PointType::Type2;
  fam.system = PdeSystem{PdeSystemKind::Type2Flat, r};
  fam.r = r;
  fam.fit_phase = true;
  return fam;
}

FamilyInstance type2_cp_instance(double r) {
  FamilyInstance fam;
  fam.imm = make_type2_cp(r);
  fam.expected_type = PointType::Type2;
  fam.system = PdeSystem{PdeSystemKind::Type2CP, r};
  fam.is_lift = true;
  fam.r = r;
  fam.fit_phase = true;
  return fam;
}

double default_iso_tol() {
  const char* env = std::getenv("LAGISO_TOL");
  if (env && *env) {
    char* end = nullptr;
    double val = std::strtod(env, &end);
    if (end && *end == '\0' && std::isfinite(val) && val > 0) return val;
  }
  return 1e-6;
}

VerificationReport run_verification(const FamilyInstance& fam,
                                    const VerifyOptions& opt) {
  if (opt.nu < 2 || opt.nv < 2)
    fail(ErrorCode::InvalidParameter, "grid needs at least 2x2 points");

  const Immersion& imm = fam.imm;
  const AmbientSpace& space = imm.space;
  const Chart& chart = imm.chart;
  const bool exact = imm.has_exact_jet();
  const bool minimal_family = fam.expected_type == PointType::Minimal;

  VerificationReport rep;
  rep.family = imm.name;
  rep.params = imm.params;
  rep.labels = imm.labels;
  rep.grid = {opt.nu, opt.nv, chart.u0, chart.u1, chart.v0, chart.v1};

  // Pointwise (non-differenced) checks run on the full grid when exact jets
  // exist; otherwise everything needs room for the difference stencils.
  double full_inset = exact ? 0.0 : 3 * opt.fd_step;
  std::vector<double> us =
      linspace(chart.u0 + full_inset, chart.u1 - full_inset, opt.nu);
  std::vector<double> vs =
      linspace(chart.v0 + full_inset, chart.v1 - full_inset, opt.nv);

  MaxTrack jets_c, lorentz, frame_n, lagr, cubic, span, tang, llres;
  MaxTrack mean_zero, ltil, sphere, horiz, pde;
  int inconsistent = 0, misclassified = 0;
  MaxTrack incons_w, miscl_w;
  double min_mean = std::numeric_limits<double>::infinity();
  MaxTrack min_mean_w;

  for (double u : us)
    for (double v : vs) {
      Jet2 j = exact ? imm.exact_jet(u, v)
                     : eval_jet2(imm, u, v, JetScheme::FiniteDifference,
                                 opt.fd_step);
      if (exact && imm.evaluate)
        jets_c.update(euclid_norm(imm.evaluate(u, v) - j.f), u, v);

      FirstFundamental g = induced_metric(space, j);
      lorentz.update(std::max(0.0, kDiscFloor - g.disc()), u, v);
      if (!(g.disc() > kDiscFloor)) continue;  // frame checks undefined here

      NullFrame fr = null_frame(j, g);
      frame_n.update(
          std::max({std::abs(inner(space, fr.e1, fr.e1)),
                    std::abs(inner(space, fr.e2, fr.e2)),
                    std::abs(inner(space, fr.e1, fr.e2) - 1)}),
          u, v);
      lagr.update(lagrangian_defect(space, j), u, v);
      cubic.update(cubic_symmetry_defect(space, j, fr), u, v);

      SecondFundamental h = second_fundamental(space, j, fr);
      span.update(h.span_residual, u, v);
      tang.update(h.tangency_residual, u, v);

      LightlikeIsotropyResult ll = lightlike_isotropy_test(h, opt.tol_alg);
      llres.update(std::max(ll.residual_e1, ll.residual_e2), u, v);

      IsotropyVerdict verdict = evaluate_point(h, opt.tol_iso);
      if (!verdict.theorem_consistent) {
        if (inconsistent == 0) incons_w.update(1, u, v);
        ++inconsistent;
      }
      if (!verdict.point_type || *verdict.point_type != fam.expected_type) {
        if (misclassified == 0) miscl_w.update(1, u, v);
        ++misclassified;
      }

      double mean_norm = minimality_defect(h);
      if (minimal_family) {
        mean_zero.update(mean_norm, u, v);
        double lt = isotropy_ratio(h, 1, 1);
        ltil.update(std::abs(isotropy_ratio(h, 1, 2) - lt), u, v);
      } else if (mean_norm < min_mean) {
        min_mean = mean_norm;
        min_mean_w.update(mean_norm, u, v);
      }

      if (fam.is_lift) {
        sphere.update(sphere_defect(space, j.f), u, v);
        horiz.update(horizontality_defect(space, j.f, j.fu, j.fv), u, v);
      }
      if (fam.system)
        pde.update(pde_residual(imm, *fam.system, u, v).max(), u, v);
    }

  // Differenced checks need margin for their stencils.
  double inset =
      std::max(opt.margin, 3 * opt.diff_step + (exact ? 0.0 : 3 * opt.fd_step));
  std::vector<double> usi = linspace(chart.u0 + inset, chart.u1 - inset, opt.nu);
  std::vector<double> vsi = linspace(chart.v0 + inset, chart.v1 - inset, opt.nv);

  MaxTrack fdvs, codazzi, gauss;
  for (double u : usi)
    for (double v : vsi) {
      if (exact) {
        Jet2 je = imm.exact_jet(u, v);
        Jet2 jf = eval_jet2(imm, u, v, JetScheme::FiniteDifference, opt.fd_step);
        double d = std::max({euclid_norm(je.f - jf.f), euclid_norm(je.fu - jf.fu),
                             euclid_norm(je.fv - jf.fv),
                             euclid_norm(je.fuu - jf.fuu),
                             euclid_norm(je.fuv - jf.fuv),
                             euclid_norm(je.fvv - jf.fvv)});
        fdvs.update(d, u, v);
      }
      codazzi.update(covariant_derivative_h(imm, u, v, opt.diff_step).codazzi_defect,
                     u, v);
      gauss.update(gauss_defect(imm, u, v, opt.diff_step), u, v);
    }

  if (exact) rep.checks.push_back(make_check("jets_consistency", jets_c, opt.tol_exact));
  rep.checks.push_back(make_check("metric_lorentzian", lorentz, 0.0));
  rep.checks.push_back(make_check("frame_null_normalization", frame_n, opt.tol_frame));
  rep.checks.push_back(make_check("lagrangian_omega", lagr, opt.tol_alg));
  rep.checks.push_back(make_check("cubic_symmetry", cubic, opt.tol_alg));
  rep.checks.push_back(make_check("h_normal_span", span, opt.tol_alg));
  rep.checks.push_back(make_check("h_tangency", tang, opt.tol_alg));
  rep.checks.push_back(make_check("lightlike_isotropy", llres, opt.tol_alg));

  {
    CheckResult c;
    c.name = "pseudo_isotropy_consistency";
    c.max_residual = inconsistent;
    c.tol = 0;
    c.pass = inconsistent == 0;
    if (incons_w.any) c.witness = std::make_pair(incons_w.u, incons_w.v);
    rep.checks.push_back(c);
  }
  {
    CheckResult c;
    c.name = "classification_constant";
    c.max_residual = misclassified;
    c.tol = 0;
    c.pass = misclassified == 0;
    if (miscl_w.any) c.witness = std::make_pair(miscl_w.u, miscl_w.v);
    rep.checks.push_back(c);
  }

  if (minimal_family) {
    rep.checks.push_back(make_check("mean_curvature_zero", mean_zero, opt.tol_minimal));
    rep.checks.push_back(make_check("lambda_tilde_constant", ltil, opt.tol_minimal));
  } else {
    CheckResult c;
    c.name = "mean_curvature_min_norm";
    double shortfall =
        std::isfinite(min_mean) ? std::max(0.0, opt.min_mean_norm - min_mean)
                                : opt.min_mean_norm;
    c.max_residual = shortfall;
    c.tol = 0;
    c.pass = shortfall <= 0;
    if (min_mean_w.any) c.witness = std::make_pair(min_mean_w.u, min_mean_w.v);
    rep.checks.push_back(c);
  }

  if (exact) rep.checks.push_back(make_check("fd_vs_exact", fdvs, opt.tol_fd));
  rep.checks.push_back(make_check("codazzi", codazzi, opt.tol_codazzi));
  rep.checks.push_back(make_check("gauss", gauss, opt.tol_gauss));

  if (fam.system) rep.checks.push_back(make_check("pde_residual", pde, opt.tol_pde));

  if (fam.is_lift) {
    rep.checks.push_back(make_check("sphere_defect", sphere, opt.tol_sphere));
    rep.checks.push_back(make_check("horizontality", horiz, opt.tol_sphere));

    Jet2 j0 = exact ? imm.exact_jet(0, 0)
                    : eval_jet2(imm, 0, 0, JetScheme::FiniteDifference,
                                opt.fd_step);
    FirstFundamental g0 = induced_metric(space, j0);
    CheckResult c;
    c.name = "initial_conditions";
    c.tol = opt.tol_exact;
    if (g0.disc() > kDiscFloor) {
      NullFrame fr0 = null_frame(j0, g0);
      double rt = 1 / std::sqrt(2.0);
      CVec f_ref{Complex(0, 0), Complex(0, 0), Complex(1, 0)};
      CVec e1_ref{Complex(rt, 0), Complex(rt, 0), Complex(0, 0)};
      CVec e2_ref{Complex(-rt, 0), Complex(rt, 0), Complex(0, 0)};
      c.max_residual =
          std::max({euclid_norm(j0.f - f_ref), euclid_norm(fr0.e1 - e1_ref),
                    euclid_norm(fr0.e2 - e2_ref)});
    } else {
      c.max_residual = std::numeric_limits<double>::infinity();
    }
    c.pass = c.max_residual <= c.tol;
    c.witness = std::make_pair(0.0, 0.0);
    rep.checks.push_back(c);
  }

  if (fam.fit_phase) {
    double v_mid = (chart.v0 + chart.v1) / 2;
    std::vector<OdeSample> samples;
    for (double u : us) {
      Jet2 j = exact ? imm.exact_jet(u, v_mid)
                     : eval_jet2(imm, u, v_mid, JetScheme::FiniteDifference,
                                 opt.fd_step);
      FirstFundamental g = induced_metric(space, j);
      if (!(g.disc() > kDiscFloor)) continue;
      NullFrame fr = null_frame(j, g);
      SecondFundamental h = second_fundamental(space, j, fr);
      samples.push_back({u, {h.q22, 0.0}});
    }
    CheckResult c;
    c.name = "lambda_phase_fit";
    c.tol = opt.tol_phase;
    if (samples.size() >= 4) {
      PhaseFit fit = fit_lambda_phase(space.c(), fam.r, samples);
      c.max_residual = std::max({fit.max_dev, std::abs(fit.amplitude - fam.r),
                                 std::abs(fit.u0)});
    } else {
      c.max_residual = std::numeric_limits<double>::infinity();
    }
    c.pass = c.max_residual <= c.tol;
    rep.checks.push_back(c);
  }

  return rep;
}

std::string sample_csv(const FamilyInstance& fam, int nu, int nv) {
  if (nu < 2 || nv < 2)
    fail(ErrorCode::InvalidParameter, "grid needs at least 2x2 points");
  const Immersion& imm = fam.imm;
  const AmbientSpace& space = imm.space;
  const bool exact = imm.has_exact_jet();
  double inset = exact ? 0.0 : 3 * kDefaultFdStep;

  std::ostringstream out;
  out << "u,v";
  for (int k = 0; k < space.q(); ++k) out << ",re" << k << ",im" << k;
  out << ",guu,guv,gvv,lambda_recovered\n";

  std::vector<double> us = linspace(imm.chart.u0 + inset, imm.chart.u1 - inset, nu);
  std::vector<double> vs = linspace(imm.chart.v0 + inset, imm.chart.v1 - inset, nv);
  for (double u : us)
    for (double v : vs) {
      Jet2 j = exact ? imm.exact_jet(u, v)
                     : eval_jet2(imm, u, v, JetScheme::FiniteDifference);
      FirstFundamental g = induced_metric(space, j);
      out << format_double(u) << "," << format_double(v);
      for (int k = 0; k < space.q(); ++k)
        out << "," << format_double(j.f[k].real()) << ","
            << format_double(j.f[k].imag());
      out << "," << format_double(g.guu) << "," << format_double(g.guv) << ","
          << format_double(g.gvv);
      if (g.disc() > kDiscFloor) {
        NullFrame fr = null_frame(j, g);
        SecondFundamental h = second_fundamental(space, j, fr);
        out << "," << format_double(h.q22);
      } else {
        out << ",nan";
      }
      out << "\n";
    }
  return out.str();
}

std::string IntegrationReport::to_json() const {
  JsonWriter w;
  w.begin_object();
  w.key("artifact_version");
  w.value(kArtifactVersion);
  w.key("c");
  w.value(c);
  w.key("r");
  w.value(r);
  w.key("step");
  w.value(step);
  w.key("steps");
  w.value(static_cast<int>(steps));
  w.key("max_deviation");
  w.value(max_deviation);
  w.key("drift");
  w.value(drift);
  w.key("pass");
  w.value(pass);
  w.end_object();
  return w.str() + "\n";
}

IntegrationReport run_integration(double c, double r, double u0, double u1,
                                  double step) {
  IntegrationReport rep;
  rep.c = c;
  rep.r = r;
  rep.step = step;
  auto rhs = [c](double, const FrameState& y) { return type2_rhs(c, y); };
  std::vector<OdeSample> traj =
      integrate_rk4(rhs, closed_form(c, r, u0), u0, u1, step);
  rep.steps = traj.size() - 1;
  for (const OdeSample& s : traj) {
    FrameState cf = closed_form(c, r, s.u);
    rep.max_deviation = std::max({rep.max_deviation,
                                  std::abs(s.y.lambda - cf.lambda),
                                  std::abs(s.y.beta - cf.beta)});
    rep.drift = std::max(rep.drift, std::abs(conserved_r(c, s.y) - r));
  }
  rep.pass = rep.max_deviation <= 1e-8 && rep.drift <= 1e-9;
  return rep;
}

}  // namespace lagiso

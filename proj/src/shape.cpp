#include "lagiso/shape.hpp"

#include <array>
#include <cmath>

namespace lagiso {

namespace {

constexpr double kGramTol = 1e-12;

// Determinant of a small symmetric matrix by Gaussian elimination with
// partial pivoting; n <= 4.
double det_n(double m[4][4], int n) {
  double det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (m[piv][col] == 0) return 0;
    if (piv != col) {
      for (int k = 0; k < n; ++k) std::swap(m[piv][k], m[col][k]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      double fct = m[r][col] / m[col][col];
      for (int k = col; k < n; ++k) m[r][k] -= fct * m[col][k];
    }
  }
  return det;
}

struct NormalProjector {
  const AmbientSpace* space;
  CVec f, jf, fu, fv;
  double ff = 1;  // <f,f> (= <jf,jf>)
  FirstFundamental g;
  double detg = 0;

  CVec operator()(CVec x) const {
    if (space->kind == AmbientKind::SphereLiftS52) {
      x -= (inner(*space, x, f) / ff) * f;
      x -= (inner(*space, x, jf) / ff) * jf;
    }
    double cu = inner(*space, x, fu);
    double cv = inner(*space, x, fv);
    double s = (cu * g.gvv - cv * g.guv) / detg;
    double t = (g.guu * cv - g.guv * cu) / detg;
    x -= s * fu;
    x -= t * fv;
    return x;
  }
};

NormalProjector make_projector(const AmbientSpace& space, const Jet2& jet,
                               const FirstFundamental& g) {
  NormalProjector p;
  p.space = &space;
  p.fu = jet.fu;
  p.fv = jet.fv;
  p.g = g;
  p.detg = g.det();
  if (std::abs(p.detg) < kGramTol)
    fail(ErrorCode::DegenerateTangent, "tangent Gram matrix is singular");
  if (space.kind == AmbientKind::SphereLiftS52) {
    p.f = jet.f;
    p.jf = jmul(jet.f);
    p.ff = inner(space, p.f, p.f);
    if (std::abs(p.ff) < kGramTol)
      fail(ErrorCode::DegenerateTangent, "lift position vector is null");
  }
  return p;
}

struct Christoffel {
  // gamma[d][a][b] = Gamma^d_ab, symmetric in (a,b)
  double gamma[2][2][2] = {};
};

Christoffel christoffel_from_metric(const FirstFundamental& g0,
                                    const FirstFundamental& gup,
                                    const FirstFundamental& gum,
                                    const FirstFundamental& gvp,
                                    const FirstFundamental& gvm, double step,
                                    const char* who) {
  // dg[a][b][c] = d_a g_bc by central differences
  auto as_mat = [](const FirstFundamental& g, double m[2][2]) {
    m[0][0] = g.guu;
    m[0][1] = m[1][0] = g.guv;
    m[1][1] = g.gvv;
  };
  double dg[2][2][2];
  {
    double p[2][2], m[2][2];
    as_mat(gup, p);
    as_mat(gum, m);
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) dg[0][b][c] = (p[b][c] - m[b][c]) / (2 * step);
    as_mat(gvp, p);
    as_mat(gvm, m);
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) dg[1][b][c] = (p[b][c] - m[b][c]) / (2 * step);
  }
  double det = g0.det();
  if (std::abs(det) < kGramTol)
    fail(ErrorCode::DegenerateTangent,
         std::string(who) + ": induced metric is singular");
  double ginv[2][2] = {{g0.gvv / det, -g0.guv / det},
                       {-g0.guv / det, g0.guu / det}};
  // Gamma_ab,c = 1/2 (d_a g_cb + d_b g_ca - d_c g_ab)
  Christoffel out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int d = 0; d < 2; ++d) {
        double s = 0;
        for (int c = 0; c < 2; ++c) {
          double first_kind =
              0.5 * (dg[a][c][b] + dg[b][c][a] - dg[c][a][b]);
          s += ginv[d][c] * first_kind;
        }
        out.gamma[d][a][b] = s;
      }
  return out;
}

}  // namespace

FirstFundamental induced_metric(const AmbientSpace& space, const Jet2& jet) {
  FirstFundamental g;
  g.guu = inner(space, jet.fu, jet.fu);
  g.guv = inner(space, jet.fu, jet.fv);
  g.gvv = inner(space, jet.fv, jet.fv);
  return g;
}

FrameCoeffs null_frame_coeffs(const FirstFundamental& g, double tol) {
  double disc = g.disc();
  if (!(disc > tol))
    fail(ErrorCode::NotLorentzian,
         "metric discriminant " + std::to_string(disc) +
             " is not positive; no real null directions");

  double scale = std::max({std::abs(g.guu), std::abs(g.guv), std::abs(g.gvv), 1.0});
  double da[2], db[2];
  if (std::abs(g.guu) <= 1e-14 * scale) {
    // guu ~ 0: du itself is null; the other root of 2 guv a b + gvv b^2 = 0.
    da[0] = 1;
    db[0] = 0;
    da[1] = -g.gvv;
    db[1] = 2 * g.guv;
  } else {
    // Stable roots of guu t^2 + 2 guv t + gvv = 0 (t = a/b).
    double s = std::sqrt(disc);
    double qq = -(g.guv + std::copysign(s, g.guv));
    da[0] = qq / g.guu;
    db[0] = 1;
    da[1] = g.gvv / qq;
    db[1] = 1;
  }

  for (int i = 0; i < 2; ++i) {
    double n = std::hypot(da[i], db[i]);
    if (n == 0) fail(ErrorCode::NotLorentzian, "degenerate null direction");
    da[i] /= n;
    db[i] /= n;
    // first nonzero coefficient positive
    double lead = std::abs(da[i]) > 1e-15 ? da[i] : db[i];
    if (lead < 0) {
      da[i] = -da[i];
      db[i] = -db[i];
    }
  }

  int first = 0;
  if (da[1] - da[0] > 1e-9)
    first = 1;
  else if (std::abs(da[1] - da[0]) <= 1e-9 && db[1] > db[0])
    first = 1;
  int second = 1 - first;

  FrameCoeffs fc;
  fc.a1 = da[first];
  fc.b1 = db[first];
  double pair = g.guu * fc.a1 * da[second] +
                g.guv * (fc.a1 * db[second] + fc.b1 * da[second]) +
                g.gvv * fc.b1 * db[second];
  if (std::abs(pair) < 1e-12)
    fail(ErrorCode::NotLorentzian, "null directions pair to zero");
  fc.a2 = da[second] / pair;
  fc.b2 = db[second] / pair;
  return fc;
}

NullFrame null_frame(const Jet2& jet, const FirstFundamental& g, double tol) {
  FrameCoeffs fc = null_frame_coeffs(g, tol);
  NullFrame fr;
  fr.c = fc;
  fr.e1 = fc.a1 * jet.fu + fc.b1 * jet.fv;
  fr.e2 = fc.a2 * jet.fu + fc.b2 * jet.fv;
  return fr;
}

SecondFundamental SecondFundamental::from_coeffs(double p11, double q11,
                                                 double p12, double q12,
                                                 double p22, double q22) {
  SecondFundamental h;
  h.p11 = p11;
  h.q11 = q11;
  h.p12 = p12;
  h.q12 = q12;
  h.p22 = p22;
  h.q22 = q22;
  return h;
}

SecondFundamental second_fundamental(const AmbientSpace& space, const Jet2& jet,
                                     const NullFrame& frame) {
  FirstFundamental g = induced_metric(space, jet);

  {
    // Degeneracy guard: real Gram of (fu, fv, J fu, J fv).
    CVec w[4] = {jet.fu, jet.fv, jmul(jet.fu), jmul(jet.fv)};
    double gram[4][4];
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) gram[i][j] = inner(space, w[i], w[j]);
    if (std::abs(det_n(gram, 4)) < kGramTol)
      fail(ErrorCode::DegenerateTangent,
           "tangent plane and its J-image do not span a nondegenerate space");
  }

  NormalProjector project = make_projector(space, jet, g);

  auto contract = [&](double ai, double bi, double aj, double bj) {
    CVec x = (ai * aj) * jet.fuu;
    x += (ai * bj + aj * bi) * jet.fuv;
    x += (bi * bj) * jet.fvv;
    return x;
  };

  const FrameCoeffs& c = frame.c;
  SecondFundamental h;
  h.h11 = project(contract(c.a1, c.b1, c.a1, c.b1));
  h.h12 = project(contract(c.a1, c.b1, c.a2, c.b2));
  h.h22 = project(contract(c.a2, c.b2, c.a2, c.b2));

  CVec je1 = jmul(frame.e1), je2 = jmul(frame.e2);
  double n11 = inner(space, je1, je1);
  double n12 = inner(space, je1, je2);
  double n21 = inner(space, je2, je1);
  double n22 = inner(space, je2, je2);
  double detn = n11 * n22 - n21 * n12;
  if (std::abs(detn) < kGramTol)
    fail(ErrorCode::DegenerateTangent, "normal basis pairing is singular");

  auto coeffs = [&](const CVec& x, double& p, double& q) {
    double r1 = inner(space, x, je1);
    double r2 = inner(space, x, je2);
    // x = p je1 + q je2  =>  [n11 n21; n12 n22] (p,q) = (r1, r2)
    p = (r1 * n22 - n21 * r2) / detn;
    q = (n11 * r2 - r1 * n12) / detn;
  };
  coeffs(h.h11, h.p11, h.q11);
  coeffs(h.h12, h.p12, h.q12);
  coeffs(h.h22, h.p22, h.q22);

  auto span_res = [&](const CVec& x, double p, double q) {
    CVec r = x - p * je1 - q * je2;
    return euclid_norm(r);
  };
  h.span_residual = std::max({span_res(h.h11, h.p11, h.q11),
                              span_res(h.h12, h.p12, h.q12),
                              span_res(h.h22, h.p22, h.q22)});
  double tres = 0;
  for (const CVec* x : {&h.h11, &h.h12, &h.h22})
    for (const CVec* t : {&jet.fu, &jet.fv})
      tres = std::max(tres, std::abs(inner(space, *x, *t)));
  h.tangency_residual = tres;
  return h;
}

CVec shape_operator(const SecondFundamental& h, int i, int j) {
  if (i < 1 || i > 2 || j < 1 || j > 2)
    fail(ErrorCode::InvalidParameter, "frame indices are 1 or 2");
  const CVec& hij = (i + j == 2) ? h.h11 : (i + j == 3) ? h.h12 : h.h22;
  if (hij.size() == 0)
    fail(ErrorCode::InvalidParameter,
         "shape operator needs ambient h vectors, not coefficient-only data");
  return Complex(-1, 0) * jmul(hij);
}

CVec mean_curvature(const SecondFundamental& h) {
  if (h.h12.size() == 0)
    fail(ErrorCode::InvalidParameter,
         "mean curvature needs ambient h vectors, not coefficient-only data");
  return h.h12;
}

double minimality_defect(const SecondFundamental& h) {
  return std::hypot(h.p12, h.q12);
}

double cubic_symmetry_defect(const AmbientSpace& space, const Jet2& jet,
                             const NullFrame& frame) {
  SecondFundamental h = second_fundamental(space, jet, frame);
  const CVec* hm[2][2] = {{&h.h11, &h.h12}, {&h.h12, &h.h22}};
  CVec je[2] = {jmul(frame.e1), jmul(frame.e2)};
  double cube[2][2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        cube[i][j][k] = inner(space, *hm[i][j], je[k]);

  double defect = 0;
  int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                     {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  int triples[4][3] = {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  for (auto& t : triples) {
    double lo = cube[t[0]][t[1]][t[2]], hi = lo;
    for (auto& p : perms) {
      double val = cube[t[p[0]]][t[p[1]]][t[p[2]]];
      lo = std::min(lo, val);
      hi = std::max(hi, val);
    }
    defect = std::max(defect, hi - lo);
  }
  return defect;
}

double lagrangian_defect(const AmbientSpace& space, const Jet2& jet) {
  return std::abs(inner(space, jmul(jet.fu), jet.fv));
}

CovariantHDerivative covariant_derivative_h(const Immersion& imm, double u,
                                            double v, double step) {
  if (!(step > 0)) fail(ErrorCode::InvalidParameter, "step must be positive");
  const bool exact = imm.has_exact_jet();
  const double margin = 3 * step + (exact ? 0.0 : 3 * kDefaultFdStep);
  if (!imm.chart.contains(u, v, margin))
    fail(ErrorCode::OutOfChart, "differencing needs margin inside the chart");

  const AmbientSpace& space = imm.space;
  auto jet_at = [&](double uu, double vv) {
    return exact ? imm.exact_jet(uu, vv)
                 : eval_jet2(imm, uu, vv, JetScheme::FiniteDifference);
  };
  auto metric_at = [&](double uu, double vv) {
    return induced_metric(space, jet_at(uu, vv));
  };
  // Coordinate-basis h components (normal projections of the second
  // partials) as a field of ambient vectors; index 0,1,2 = (uu, uv, vv).
  auto h_field = [&](double uu, double vv) -> std::array<CVec, 3> {
    Jet2 j = jet_at(uu, vv);
    FirstFundamental g = induced_metric(space, j);
    NormalProjector pr = make_projector(space, j, g);
    return {pr(j.fuu), pr(j.fuv), pr(j.fvv)};
  };

  Jet2 j0 = jet_at(u, v);
  FirstFundamental g0 = induced_metric(space, j0);
  NormalProjector p0 = make_projector(space, j0, g0);

  std::array<CVec, 3> H0 = h_field(u, v);
  std::array<CVec, 3> Hup = h_field(u + step, v), Hum = h_field(u - step, v);
  std::array<CVec, 3> Hvp = h_field(u, v + step), Hvm = h_field(u, v - step);

  CVec nabla_perp[2][3];
  for (int s = 0; s < 3; ++s) {
    nabla_perp[0][s] = p0((1.0 / (2 * step)) * (Hup[s] - Hum[s]));
    nabla_perp[1][s] = p0((1.0 / (2 * step)) * (Hvp[s] - Hvm[s]));
  }

  Christoffel gam = christoffel_from_metric(
      g0, metric_at(u + step, v), metric_at(u - step, v),
      metric_at(u, v + step), metric_at(u, v - step), step,
      "covariant_derivative_h");

  auto H = [&](int b, int c) -> const CVec& { return H0[b + c]; };

  CovariantHDerivative out;
  for (int a = 0; a < 2; ++a) {
    int s = 0;
    for (auto [b, c] : {std::pair{0, 0}, std::pair{0, 1}, std::pair{1, 1}}) {
      CVec t = nabla_perp[a][b + c];
      for (int d = 0; d < 2; ++d) {
        t -= gam.gamma[d][a][b] * H(d, c);
        t -= gam.gamma[d][a][c] * H(d, b);
      }
      out.comp[a][s++] = t;
    }
  }

  // (T)(u;v,c) vs (T)(v;u,c): slot of (v,c) in comp[0] is 1 + c, slot of
  // (u,c) in comp[1] is c.
  double cz = 0;
  for (int c = 0; c < 2; ++c)
    cz = std::max(cz, euclid_norm(out.comp[0][1 + c] - out.comp[1][c]));
  out.codazzi_defect = cz;
  return out;
}

double gauss_defect(const Immersion& imm, double u, double v, double step) {
  if (!(step > 0)) fail(ErrorCode::InvalidParameter, "step must be positive");
  const bool exact = imm.has_exact_jet();
  const double margin = 3 * step + (exact ? 0.0 : 3 * kDefaultFdStep);
  if (!imm.chart.contains(u, v, margin))
    fail(ErrorCode::OutOfChart, "differencing needs margin inside the chart");

  const AmbientSpace& space = imm.space;
  auto jet_at = [&](double uu, double vv) {
    return exact ? imm.exact_jet(uu, vv)
                 : eval_jet2(imm, uu, vv, JetScheme::FiniteDifference);
  };
  auto metric_at = [&](double uu, double vv) {
    return induced_metric(space, jet_at(uu, vv));
  };
  auto christoffel_at = [&](double uu, double vv) {
    return christoffel_from_metric(
        metric_at(uu, vv), metric_at(uu + step, vv), metric_at(uu - step, vv),
        metric_at(uu, vv + step), metric_at(uu, vv - step), step,
        "gauss_defect");
  };

  Jet2 j0 = jet_at(u, v);
  FirstFundamental g0 = induced_metric(space, j0);
  NullFrame fr = null_frame(j0, g0);
  SecondFundamental h = second_fundamental(space, j0, fr);

  Christoffel c0 = christoffel_at(u, v);
  Christoffel cup = christoffel_at(u + step, v), cum = christoffel_at(u - step, v);
  Christoffel cvp = christoffel_at(u, v + step), cvm = christoffel_at(u, v - step);

  // R^d_c for the pair (d_u, d_v):
  // R^d_c = d_u Gamma^d_vc - d_v Gamma^d_uc
  //         + sum_e (Gamma^e_vc Gamma^d_ue - Gamma^e_uc Gamma^d_ve)
  double R[2][2];
  for (int d = 0; d < 2; ++d)
    for (int c = 0; c < 2; ++c) {
      double dgu = (cup.gamma[d][1][c] - cum.gamma[d][1][c]) / (2 * step);
      double dgv = (cvp.gamma[d][0][c] - cvm.gamma[d][0][c]) / (2 * step);
      double quad = 0;
      for (int e = 0; e < 2; ++e)
        quad += c0.gamma[e][1][c] * c0.gamma[d][0][e] -
                c0.gamma[e][0][c] * c0.gamma[d][1][e];
      R[d][c] = dgu - dgv + quad;
    }

  double gmat[2][2] = {{g0.guu, g0.guv}, {g0.guv, g0.gvv}};
  double e1c[2] = {fr.c.a1, fr.c.b1}, e2c[2] = {fr.c.a2, fr.c.b2};
  double area = fr.c.a1 * fr.c.b2 - fr.c.b1 * fr.c.a2;
  double lhs = 0;
  for (int c = 0; c < 2; ++c)
    for (int d = 0; d < 2; ++d) {
      double low = gmat[d][0] * e1c[0] + gmat[d][1] * e1c[1];
      lhs += e2c[c] * R[d][c] * low;
    }
  lhs *= area;

  double hh = inner(space, h.h22, h.h11) - inner(space, h.h12, h.h12);
  double s11 = inner(space, fr.e1, fr.e1);
  double s22 = inner(space, fr.e2, fr.e2);
  double s12 = inner(space, fr.e1, fr.e2);
  double rhs = hh + space.c() * (s11 * s22 - s12 * s12);
  return std::abs(lhs - rhs);
}

double gauss_residual_from_coeffs(double c, const SecondFundamental& h,
                                  double curvature_term) {
  double hh = normal_pairing(h.p22, h.q22, h.p11, h.q11) -
              normal_pairing(h.p12, h.q12, h.p12, h.q12);
  // exact null frame: <E1,E1><E2,E2> - <E1,E2>^2 = -1
  return std::abs(curvature_term - (hh - c));
}

}  // namespace lagiso

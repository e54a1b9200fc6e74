#include "lagiso/isotropy.hpp"

#include <cmath>

#include "lagiso/error.hpp"

namespace lagiso {

namespace {

// Coefficients of h(Ei,Ej) in the (JE1, JE2) basis, 1-based indices.
void h_coeffs(const SecondFundamental& h, int i, int j, double& p, double& q) {
  switch (i + j) {
    case 2: p = h.p11; q = h.q11; return;
    case 3: p = h.p12; q = h.q12; return;
    default: p = h.p22; q = h.q22; return;
  }
}

// <Ei, Ej> in a null frame.
double frame_inner(int i, int j) { return i == j ? 0.0 : 1.0; }

double pair_h(const SecondFundamental& h, int i, int j, int k, int l) {
  double p1, q1, p2, q2;
  h_coeffs(h, i, j, p1, q1);
  h_coeffs(h, k, l, p2, q2);
  return normal_pairing(p1, q1, p2, q2);
}

}  // namespace

std::string to_string(PointType t) {
  switch (t) {
    case PointType::Minimal: return "minimal";
    case PointType::Type1: return "type1";
    case PointType::Type2: return "type2";
  }
  return "?";
}

double isotropy_ratio(const SecondFundamental& h, double c1, double c2) {
  double vv = 2 * c1 * c2;
  double scale = c1 * c1 + c2 * c2;
  if (scale == 0 || std::abs(vv) <= 1e-12 * scale)
    fail(ErrorCode::NullVector, "isotropy ratio is undefined on null vectors");
  double p = c1 * c1 * h.p11 + 2 * c1 * c2 * h.p12 + c2 * c2 * h.p22;
  double q = c1 * c1 * h.q11 + 2 * c1 * c2 * h.q12 + c2 * c2 * h.q22;
  return normal_pairing(p, q, p, q) / (vv * vv);
}

PseudoIsotropyResult pseudo_isotropy_test(const SecondFundamental& h,
                                          double tol) {
  PseudoIsotropyResult out;
  double lt = isotropy_ratio(h, 1, 1);

  double raw = 0;
  std::array<int, 4> wit = {1, 1, 1, 1};
  int idx[4];
  for (idx[0] = 1; idx[0] <= 2; ++idx[0])
    for (idx[1] = 1; idx[1] <= 2; ++idx[1])
      for (idx[2] = 1; idx[2] <= 2; ++idx[2])
        for (idx[3] = 1; idx[3] <= 2; ++idx[3]) {
          int x = idx[0], y = idx[1], z = idx[2], w = idx[3];
          double lhs = pair_h(h, x, y, z, w) + pair_h(h, y, z, x, w) +
                       pair_h(h, z, x, y, w);
          double rhs = lt * (frame_inner(x, y) * frame_inner(z, w) +
                             frame_inner(y, z) * frame_inner(x, w) +
                             frame_inner(z, x) * frame_inner(y, w));
          double r = std::abs(lhs - rhs);
          if (r > raw) {
            raw = r;
            wit = {x, y, z, w};
          }
        }

  out.max_residual_raw = raw;
  out.max_residual = raw / std::max(1.0, h.coeff_norm2());
  out.witness = wit;
  out.pseudo_isotropic = out.max_residual <= tol;
  if (out.pseudo_isotropic) out.lambda_tilde = lt;
  return out;
}

LightlikeIsotropyResult lightlike_isotropy_test(const SecondFundamental& h,
                                                double tol) {
  LightlikeIsotropyResult out;
  double scale = std::max(1.0, h.coeff_norm2());
  out.residual_e1 = std::abs(pair_h(h, 1, 1, 1, 1)) / scale;
  out.residual_e2 = std::abs(pair_h(h, 2, 2, 2, 2)) / scale;
  out.lightlike_isotropic = out.residual_e1 <= tol && out.residual_e2 <= tol;
  return out;
}

PointType classify_point(const SecondFundamental& h, double tol) {
  LightlikeIsotropyResult ll = lightlike_isotropy_test(h, tol);
  if (!ll.lightlike_isotropic)
    fail(ErrorCode::NotLightlikeIsotropic,
         "point type is defined only where h is null on null directions");
  if (std::hypot(h.p11, h.q11) <= tol && std::hypot(h.p22, h.q22) <= tol)
    return PointType::Minimal;
  // h(E1,E1) = p11 JE1 + q11 JE2 is parallel to JE1 iff q11 = 0; likewise
  // h(E2,E2) is parallel to JE2 iff p22 = 0.
  if (std::abs(h.q11) > tol || std::abs(h.p22) > tol) return PointType::Type1;
  return PointType::Type2;
}

IsotropyVerdict evaluate_point(const SecondFundamental& h, double tol) {
  IsotropyVerdict v;
  PseudoIsotropyResult pi = pseudo_isotropy_test(h, tol);
  LightlikeIsotropyResult ll = lightlike_isotropy_test(h, tol);
  v.pseudo_isotropic = pi.pseudo_isotropic;
  v.lambda_tilde = pi.lambda_tilde;
  v.lightlike_isotropic = ll.lightlike_isotropic;
  double mean_defect = minimality_defect(h);
  v.minimal = mean_defect <= tol;
  v.theorem_consistent = v.pseudo_isotropic == v.minimal;
  if (ll.lightlike_isotropic) v.point_type = classify_point(h, tol);
  v.residuals["pseudo_isotropy"] = pi.max_residual;
  v.residuals["pseudo_isotropy_raw"] = pi.max_residual_raw;
  v.residuals["lightlike_e1"] = ll.residual_e1;
  v.residuals["lightlike_e2"] = ll.residual_e2;
  v.residuals["mean_curvature"] = mean_defect;
  return v;
}

}  // namespace lagiso

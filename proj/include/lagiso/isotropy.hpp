#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "lagiso/shape.hpp"

namespace lagiso {

// Pointwise shape of the second fundamental form on the two null tangent
// directions, for points where both h(E1,E1) and h(E2,E2) are null normals.
enum class PointType { Minimal, Type1, Type2 };

std::string to_string(PointType t);

// <h(v,v), h(v,v)> / <v,v>^2 for the tangent vector v = c1 E1 + c2 E2.
// Throws NullVector when v is (numerically) lightlike.
double isotropy_ratio(const SecondFundamental& h, double c1, double c2);

struct PseudoIsotropyResult {
  bool pseudo_isotropic = false;
  // The constant in <h(v,v),h(v,v)> = lambda_tilde <v,v>^2; only set when
  // the polarized identity actually holds on all frame tuples.
  std::optional<double> lambda_tilde;
  double max_residual = 0;      // worst tuple residual / max(1, |h|^2)
  double max_residual_raw = 0;  // worst tuple residual, unnormalized
  std::array<int, 4> witness = {1, 1, 1, 1};  // frame indices of worst tuple
};

// Tests the fully polarized form of <h(v,v),h(v,v)> = lambda_tilde <v,v>^2
// over all 4^2 tuples from the null frame, with lambda_tilde sampled at
// v = E1 + E2.
PseudoIsotropyResult pseudo_isotropy_test(const SecondFundamental& h,
                                          double tol = 1e-6);

struct LightlikeIsotropyResult {
  bool lightlike_isotropic = false;
  double residual_e1 = 0;  // |<h(E1,E1), h(E1,E1)>| / max(1, |h|^2)
  double residual_e2 = 0;  // |<h(E2,E2), h(E2,E2)>| / max(1, |h|^2)
};

LightlikeIsotropyResult lightlike_isotropy_test(const SecondFundamental& h,
                                                double tol = 1e-6);

// Classification of a lightlike isotropic point. Throws
// NotLightlikeIsotropic when h(E1,E1) or h(E2,E2) is not null.
//   Minimal: h(E1,E1) and h(E2,E2) both vanish (with the cubic symmetry of
//            a Lagrangian immersion this forces h = 0).
//   Type1:   h(E1,E1) not parallel to JE1, or h(E2,E2) not parallel to JE2.
//   Type2:   h(E1,E1) parallel to JE1 and h(E2,E2) parallel to JE2.
PointType classify_point(const SecondFundamental& h, double tol = 1e-6);

// Everything the pointwise theory asserts, bundled: pseudo-isotropy should
// hold exactly when the mean curvature vanishes.
struct IsotropyVerdict {
  bool pseudo_isotropic = false;
  std::optional<double> lambda_tilde;
  bool lightlike_isotropic = false;
  bool minimal = false;
  bool theorem_consistent = false;  // pseudo_isotropic == minimal
  std::optional<PointType> point_type;
  std::map<std::string, double> residuals;
};

IsotropyVerdict evaluate_point(const SecondFundamental& h, double tol = 1e-6);

}  // namespace lagiso

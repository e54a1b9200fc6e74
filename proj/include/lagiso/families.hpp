#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lagiso/jets.hpp"
#include "lagiso/shape.hpp"

namespace lagiso {

// A scalar curve with two derivatives, used to drive the ruled families.
struct CurveFn {
  std::function<double(double)> f, d1, d2;
  std::string label;
};

CurveFn curve_sin();
CurveFn curve_cos();
CurveFn curve_exp();
CurveFn curve_poly(const std::vector<double>& coeffs);

// "sin" | "cos" | "exp" | "poly:c0,c1,..."
CurveFn parse_curve(const std::string& text);

// Totally geodesic Lorentzian plane (u, v) in the flat ambient.
Immersion make_plane();

// f(x, v) = (alpha(x) w1 + beta(x) w2) e^{iv} in the curve's own parameter x;
// the induced metric is (0, W, 0) with W the Wronskian of (alpha, beta).
// Throws DegenerateCurve when W comes close to zero on [x0, x1].
Immersion make_type1(const CurveFn& alpha, const CurveFn& beta, double x0 = -1,
                     double x1 = 1);

// Monotone change of parameter u(x) = int_0^x W, normalizing the Wronskian
// to one. The curves are swapped when W < 0 so that u increases with x.
struct ParamMap {
  std::vector<double> x_nodes, u_nodes;
  bool swapped = false;
  std::function<double(double)> u_of_x, x_of_u;
  std::function<double(double)> wron, dwron;  // after any swap
};

ParamMap arclength_reparam(const CurveFn& alpha, const CurveFn& beta,
                           double x0, double x1, double step = 1e-2);

// The same surface as make_type1, reparameterized so the metric is (0, 1, 0).
Immersion make_type1_unit_wronskian(const CurveFn& alpha, const CurveFn& beta,
                                    double x0 = -1, double x1 = 1,
                                    double step = 1e-2);

// Flat ruled family in the flat ambient; r >= 0. r = 0 gives the totally
// umbilic-free product-like surface, r > 0 the family with metric
// (0, 1, -2 r sin u).
Immersion make_type2_flat(double r);

// Horizontal unit-sphere lift of the curved-quotient family; r >= 0 selects
// the trigonometric (r < 1), polynomial (r = 1), or hyperbolic (r > 1)
// profile. Metric (0, 1, -2 lambda) with lambda = -1 + r sin u.
Immersion make_type2_cp(double r);

// Frame and second fundamental form of the surface a horizontal sphere
// immersion projects to. Validates sphere membership and horizontality
// before projecting (NotOnSphere / NotHorizontal).
struct ProjectedGeometry {
  NullFrame frame;
  SecondFundamental h;
};

ProjectedGeometry projected_geometry(const AmbientSpace& space, const Jet2& jet,
                                     double sphere_tol = 1e-8);

}  // namespace lagiso

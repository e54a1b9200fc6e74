#pragma once

#include <functional>
#include <vector>

#include "lagiso/jets.hpp"

namespace lagiso {

// State of the structure equations along the u-direction: the frame function
// lambda and its derivative beta.
struct FrameState {
  double lambda = 0;
  double beta = 0;
};

// lambda' = beta, beta' = -(c + lambda), where c is the ambient holomorphic
// sectional curvature scale (0 or 1 here).
FrameState type2_rhs(double c, const FrameState& y);

struct OdeSample {
  double u = 0;
  FrameState y;
};

using OdeRhs = std::function<FrameState(double, const FrameState&)>;

// Classical fixed-step RK4 from u0 to u1 (final step shortened to land on
// u1 exactly). Returns the full trajectory including the initial sample.
// Throws NumericalBlowup if the state stops being finite.
std::vector<OdeSample> integrate_rk4(const OdeRhs& rhs, const FrameState& y0,
                                     double u0, double u1, double step);

// lambda = -c + r sin u, beta = r cos u; the general bounded solution of
// type2_rhs with amplitude r and phase zero.
FrameState closed_form(double c, double r, double u);

// First integral sqrt((lambda + c)^2 + beta^2); constant along solutions.
double conserved_r(double c, const FrameState& y);

enum class PdeSystemKind { Type1, Type2Flat, Type2CP };

struct PdeSystem {
  PdeSystemKind kind = PdeSystemKind::Type1;
  double r = 0;  // used by the Type2 systems
};

struct PdeResiduals {
  double uu = 0, uv = 0, vv = 0;
  double lambda_used = 0;  // coefficient recovered/used in the uu or vv slot
  double max() const { return uu > uv ? (uu > vv ? uu : vv) : (uv > vv ? uv : vv); }
};

// Residuals of the characterizing second-order system at one point. Throws
// SystemMismatch when the system does not apply to the immersion's ambient.
PdeResiduals pde_residual(const Immersion& imm, const PdeSystem& sys, double u,
                          double v);

struct PhaseFit {
  double u0 = 0;         // phase: samples ~ amplitude * sin(u + u0)
  double amplitude = 0;  // fitted amplitude
  double max_dev = 0;    // worst deviation of a sample from the fit
};

// Least-squares fit of lambda(u) + c to a * sin u + b * cos u over the given
// trajectory samples.
PhaseFit fit_lambda_phase(double c, double r,
                          const std::vector<OdeSample>& samples);

}  // namespace lagiso

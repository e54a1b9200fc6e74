#include "lagiso/frameflow.hpp"

#include <cmath>

#include "lagiso/error.hpp"
#include "lagiso/shape.hpp"

namespace lagiso {

FrameState type2_rhs(double c, const FrameState& y) {
  return {y.beta, -(c + y.lambda)};
}

std::vector<OdeSample> integrate_rk4(const OdeRhs& rhs, const FrameState& y0,
                                     double u0, double u1, double step) {
  if (!(step > 0)) fail(ErrorCode::InvalidParameter, "step must be positive");
  if (u1 < u0) fail(ErrorCode::InvalidParameter, "u1 must be >= u0");

  auto axpy = [](const FrameState& y, double a, const FrameState& d) {
    return FrameState{y.lambda + a * d.lambda, y.beta + a * d.beta};
  };

  std::vector<OdeSample> out;
  out.push_back({u0, y0});
  double u = u0;
  FrameState y = y0;
  while (u < u1 - 1e-15 * std::max(1.0, std::abs(u1))) {
    double h = std::min(step, u1 - u);
    FrameState k1 = rhs(u, y);
    FrameState k2 = rhs(u + h / 2, axpy(y, h / 2, k1));
    FrameState k3 = rhs(u + h / 2, axpy(y, h / 2, k2));
    FrameState k4 = rhs(u + h, axpy(y, h, k3));
    y.lambda += h / 6 * (k1.lambda + 2 * k2.lambda + 2 * k3.lambda + k4.lambda);
    y.beta += h / 6 * (k1.beta + 2 * k2.beta + 2 * k3.beta + k4.beta);
    u += h;
    if (!std::isfinite(y.lambda) || !std::isfinite(y.beta))
      fail(ErrorCode::NumericalBlowup,
           "trajectory left the finite range near u = " + std::to_string(u));
    out.push_back({u, y});
  }
  return out;
}

FrameState closed_form(double c, double r, double u) {
  return {-c + r * std::sin(u), r * std::cos(u)};
}

double conserved_r(double c, const FrameState& y) {
  return std::hypot(y.lambda + c, y.beta);
}

PdeResiduals pde_residual(const Immersion& imm, const PdeSystem& sys, double u,
                          double v) {
  const AmbientSpace& space = imm.space;
  AmbientKind need = sys.kind == PdeSystemKind::Type2CP
                         ? AmbientKind::SphereLiftS52
                         : AmbientKind::FlatC21;
  if (space.kind != need)
    fail(ErrorCode::SystemMismatch,
         "system and immersion live in different ambients");

  Jet2 j = eval_jet2(imm, u, v,
                     imm.has_exact_jet() ? JetScheme::Exact
                                         : JetScheme::FiniteDifference);
  const Complex i(0, 1);
  PdeResiduals out;

  switch (sys.kind) {
    case PdeSystemKind::Type1: {
      // f_vv = i f_v, f_uv = i f_u, f_uu = lam3 * i f_v with the cubic
      // coefficient lam3 read off from f_uu = -lam3 f.
      double ff = 0, fuuf = 0;
      for (std::size_t k = 0; k < j.f.size(); ++k) {
        ff += std::norm(j.f[k]);
        fuuf += (j.fuu[k] * std::conj(j.f[k])).real();
      }
      if (ff < 1e-14) fail(ErrorCode::DegenerateCurve, "curve passes through 0");
      double lam3 = -fuuf / ff;
      out.lambda_used = lam3;
      out.uu = euclid_norm(j.fuu - lam3 * (i * j.fv));
      out.uv = euclid_norm(j.fuv - i * j.fu);
      out.vv = euclid_norm(j.fvv - i * j.fv);
      break;
    }
    case PdeSystemKind::Type2Flat: {
      double r = sys.r;
      Complex emiu = std::exp(Complex(0, -u));
      out.lambda_used = r * std::sin(u);
      out.uu = euclid_norm(j.fuu - i * j.fu);
      out.uv = euclid_norm(j.fuv - (-r * emiu * j.fu + i * j.fv));
      CVec vv_rhs = (r * emiu) * j.fv;
      vv_rhs += (i * r * r * (emiu * emiu - 1.0)) * j.fu;
      out.vv = euclid_norm(j.fvv - vv_rhs);
      break;
    }
    case PdeSystemKind::Type2CP: {
      double r = sys.r;
      double lam = -1 + r * std::sin(u);
      Complex emiu = std::exp(Complex(0, -u));
      Complex a = i + r * emiu;
      out.lambda_used = lam;
      out.uu = euclid_norm(j.fuu - i * j.fu);
      {
        CVec rhs = (-a) * j.fu;
        rhs += i * j.fv;
        rhs -= j.f;
        out.uv = euclid_norm(j.fuv - rhs);
      }
      {
        // f_vv = a (-2 f_u + f_v + 2 r sin(u) f_u) - 2 (1 - r sin u) f
        CVec w = (-2.0 + 2.0 * r * std::sin(u)) * j.fu;
        w += j.fv;
        CVec rhs = a * w;
        rhs -= (2.0 * (1 - r * std::sin(u))) * j.f;
        out.vv = euclid_norm(j.fvv - rhs);
      }
      break;
    }
  }
  return out;
}

PhaseFit fit_lambda_phase(double c, double r,
                          const std::vector<OdeSample>& samples) {
  if (samples.empty())
    fail(ErrorCode::InvalidParameter, "phase fit needs at least one sample");
  double ss = 0, sc = 0, cc = 0, sy = 0, cy = 0;
  for (const OdeSample& s : samples) {
    double sn = std::sin(s.u), cn = std::cos(s.u);
    double y = s.y.lambda + c;
    ss += sn * sn;
    sc += sn * cn;
    cc += cn * cn;
    sy += sn * y;
    cy += cn * y;
  }
  double det = ss * cc - sc * sc;
  double a, b;
  if (std::abs(det) < 1e-12) {
    // Degenerate sampling (single point or aliased grid): project onto the
    // dominant basis function instead of solving the full normal equations.
    a = ss > cc ? sy / ss : 0;
    b = cc >= ss && cc > 0 ? cy / cc : 0;
  } else {
    a = (sy * cc - cy * sc) / det;
    b = (ss * cy - sc * sy) / det;
  }

  PhaseFit fit;
  fit.amplitude = std::hypot(a, b);
  fit.u0 = (std::abs(r) < 1e-12 || fit.amplitude < 1e-12) ? 0 : std::atan2(b, a);
  double dev = 0;
  for (const OdeSample& s : samples) {
    double y = s.y.lambda + c;
    dev = std::max(dev,
                   std::abs(y - a * std::sin(s.u) - b * std::cos(s.u)));
  }
  fit.max_dev = dev;
  return fit;
}

}  // namespace lagiso

#include "lagiso/families.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "lagiso/error.hpp"

namespace lagiso {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kPi = 3.14159265358979323846;

CVec zero_vec(std::size_t n) {
  CVec z;
  z.e.assign(n, Complex(0, 0));
  return z;
}

// ca * w1 + cb * w2 with w1 = (-i, -i)/sqrt(2), w2 = (1, -1)/sqrt(2); the
// basis satisfies herm(w1, w1) = herm(w2, w2) = 0 and herm(w1, w2) = i, so
// real curves (alpha, beta) give null coordinate directions.
CVec curve_vec(double ca, double cb) {
  return CVec{Complex(cb / kSqrt2, -ca / kSqrt2),
              Complex(-cb / kSqrt2, -ca / kSqrt2)};
}

double raw_wronskian(const CurveFn& a, const CurveFn& b, double x) {
  return a.d1(x) * b.f(x) - a.f(x) * b.d1(x);
}

void require_nondegenerate(const CurveFn& a, const CurveFn& b, double x0,
                           double x1) {
  double wmin = std::numeric_limits<double>::infinity(), wmax = 0;
  const int n = 200;
  for (int i = 0; i <= n; ++i) {
    double x = x0 + (x1 - x0) * i / n;
    double w = std::abs(raw_wronskian(a, b, x));
    wmin = std::min(wmin, w);
    wmax = std::max(wmax, w);
  }
  if (wmin <= 1e-8 * std::max(1.0, wmax))
    fail(ErrorCode::DegenerateCurve,
         "curve pair (" + a.label + ", " + b.label +
             ") has a vanishing Wronskian on the parameter range");
}

double simpson(const std::function<double(double)>& f, double a, double b) {
  return (b - a) / 6 * (f(a) + 4 * f((a + b) / 2) + f(b));
}

}  // namespace

CurveFn curve_sin() {
  return {[](double x) { return std::sin(x); },
          [](double x) { return std::cos(x); },
          [](double x) { return -std::sin(x); },
          "sin"};
}

CurveFn curve_cos() {
  return {[](double x) { return std::cos(x); },
          [](double x) { return -std::sin(x); },
          [](double x) { return -std::cos(x); },
          "cos"};
}

CurveFn curve_exp() {
  return {[](double x) { return std::exp(x); },
          [](double x) { return std::exp(x); },
          [](double x) { return std::exp(x); },
          "exp"};
}

CurveFn curve_poly(const std::vector<double>& coeffs) {
  if (coeffs.empty())
    fail(ErrorCode::InvalidParameter, "polynomial needs at least one coefficient");
  auto horner = [](const std::vector<double>& c, double x) {
    double acc = 0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
    return acc;
  };
  std::vector<double> d1(coeffs.size() > 1 ? coeffs.size() - 1 : 1, 0.0);
  for (std::size_t k = 1; k < coeffs.size(); ++k) d1[k - 1] = k * coeffs[k];
  std::vector<double> d2(d1.size() > 1 ? d1.size() - 1 : 1, 0.0);
  for (std::size_t k = 1; k < d1.size(); ++k) d2[k - 1] = k * d1[k];

  std::ostringstream label;
  label << "poly:";
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k) label << ",";
    label << coeffs[k];
  }
  return {[coeffs, horner](double x) { return horner(coeffs, x); },
          [d1, horner](double x) { return horner(d1, x); },
          [d2, horner](double x) { return horner(d2, x); },
          label.str()};
}

CurveFn parse_curve(const std::string& text) {
  if (text == "sin") return curve_sin();
  if (text == "cos") return curve_cos();
  if (text == "exp") return curve_exp();
  if (text.rfind("poly:", 0) == 0) {
    std::vector<double> coeffs;
    std::stringstream ss(text.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        double val = std::stod(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        coeffs.push_back(val);
      } catch (const std::exception&) {
        fail(ErrorCode::InvalidParameter,
             "bad polynomial coefficient '" + item + "'");
      }
    }
    if (coeffs.empty())
      fail(ErrorCode::InvalidParameter, "empty polynomial coefficient list");
    return curve_poly(coeffs);
  }
  fail(ErrorCode::InvalidParameter, "unknown curve '" + text + "'");
}

Immersion make_plane() {
  Immersion imm;
  imm.space = flat_c21();
  imm.chart = {-1, 1, -1, 1};
  imm.name = "plane";
  auto jet = [](double u, double v) {
    Jet2 j;
    j.f = CVec{Complex(u, 0), Complex(v, 0)};
    j.fu = CVec{Complex(1, 0), Complex(0, 0)};
    j.fv = CVec{Complex(0, 0), Complex(1, 0)};
    j.fuu = zero_vec(2);
    j.fuv = zero_vec(2);
    j.fvv = zero_vec(2);
    return j;
  };
  imm.exact_jet = jet;
  imm.evaluate = [jet](double u, double v) { return jet(u, v).f; };
  return imm;
}

Immersion make_type1(const CurveFn& alpha, const CurveFn& beta, double x0,
                     double x1) {
  if (!(x0 < x1)) fail(ErrorCode::InvalidParameter, "need x0 < x1");
  require_nondegenerate(alpha, beta, x0, x1);

  Immersion imm;
  imm.space = flat_c21();
  imm.chart = {x0, x1, -1, 1};
  imm.name = "type1-raw";
  imm.labels = {{"alpha", alpha.label}, {"beta", beta.label}};
  CurveFn a = alpha, b = beta;
  auto jet = [a, b](double x, double v) {
    CVec A = curve_vec(a.f(x), b.f(x));
    CVec Ax = curve_vec(a.d1(x), b.d1(x));
    CVec Axx = curve_vec(a.d2(x), b.d2(x));
    Complex eiv = std::polar(1.0, v);
    Complex ieiv = Complex(0, 1) * eiv;
    Jet2 j;
    j.f = eiv * A;
    j.fu = eiv * Ax;
    j.fv = ieiv * A;
    j.fuu = eiv * Axx;
    j.fuv = ieiv * Ax;
    j.fvv = Complex(-1, 0) * (eiv * A);
    return j;
  };
  imm.exact_jet = jet;
  imm.evaluate = [jet](double u, double v) { return jet(u, v).f; };
  return imm;
}

ParamMap arclength_reparam(const CurveFn& alpha, const CurveFn& beta, double x0,
                           double x1, double step) {
  if (!(x0 < x1)) fail(ErrorCode::InvalidParameter, "need x0 < x1");
  if (!(step > 0)) fail(ErrorCode::InvalidParameter, "step must be positive");
  if (x0 > 0 || x1 < 0)
    fail(ErrorCode::InvalidParameter,
         "parameter range must contain the anchor point 0");
  require_nondegenerate(alpha, beta, x0, x1);

  bool swapped = raw_wronskian(alpha, beta, 0) < 0;
  CurveFn a = swapped ? beta : alpha;
  CurveFn b = swapped ? alpha : beta;

  ParamMap pm;
  pm.swapped = swapped;
  pm.wron = [a, b](double x) { return raw_wronskian(a, b, x); };
  pm.dwron = [a, b](double x) {
    return a.d2(x) * b.f(x) - a.f(x) * b.d2(x);
  };

  // Node grid with 0 as a node, so the anchor u(0) = 0 is exact.
  std::vector<double> xs{0.0};
  while (xs.back() > x0) {
    double nx = xs.back() - step;
    if (nx < x0 + 1e-12) nx = x0;
    xs.push_back(nx);
  }
  std::reverse(xs.begin(), xs.end());
  while (xs.back() < x1) {
    double nx = xs.back() + step;
    if (nx > x1 - 1e-12) nx = x1;
    xs.push_back(nx);
  }

  std::vector<double> us(xs.size(), 0.0);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    us[i + 1] = us[i] + simpson(pm.wron, xs[i], xs[i + 1]);
  std::size_t i0 = 0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (std::abs(xs[i]) < std::abs(xs[i0])) i0 = i;
  double shift = us[i0];
  for (double& u : us) u -= shift;

  pm.x_nodes = xs;
  pm.u_nodes = us;

  auto wr = pm.wron;
  auto u_of_x = [xs, us, wr](double x) {
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    int i = std::clamp<int>(int(it - xs.begin()) - 1, 0, int(xs.size()) - 2);
    return us[i] + simpson(wr, xs[i], x);
  };
  pm.u_of_x = u_of_x;
  pm.x_of_u = [xs, us, wr, u_of_x](double u) {
    auto it = std::upper_bound(us.begin(), us.end(), u);
    int i = std::clamp<int>(int(it - us.begin()) - 1, 0, int(us.size()) - 2);
    double span = us[i + 1] - us[i];
    double t = span > 0 ? (u - us[i]) / span : 0.0;
    double x = xs[i] + t * (xs[i + 1] - xs[i]);
    for (int iter = 0; iter < 50; ++iter) {
      double w = wr(x);
      if (std::abs(w) < 1e-14) break;
      double dx = (u_of_x(x) - u) / w;
      x -= dx;
      if (std::abs(dx) <= 1e-14 * std::max(1.0, std::abs(x))) break;
    }
    return x;
  };
  return pm;
}

Immersion make_type1_unit_wronskian(const CurveFn& alpha, const CurveFn& beta,
                                    double x0, double x1, double step) {
  ParamMap pm = arclength_reparam(alpha, beta, x0, x1, step);
  CurveFn a = pm.swapped ? beta : alpha;
  CurveFn b = pm.swapped ? alpha : beta;

  Immersion imm;
  imm.space = flat_c21();
  imm.chart = {pm.u_nodes.front(), pm.u_nodes.back(), -1, 1};
  imm.name = "type1";
  imm.labels = {{"alpha", a.label}, {"beta", b.label}};

  auto x_of_u = pm.x_of_u;
  auto wr = pm.wron;
  auto dwr = pm.dwron;
  auto jet = [a, b, x_of_u, wr, dwr](double u, double v) {
    double x = x_of_u(u);
    CVec A = curve_vec(a.f(x), b.f(x));
    CVec Ax = curve_vec(a.d1(x), b.d1(x));
    CVec Axx = curve_vec(a.d2(x), b.d2(x));
    double w = wr(x);
    double xp = 1 / w;
    double xpp = -dwr(x) / (w * w * w);
    CVec Au = xp * Ax;
    CVec Auu = (xp * xp) * Axx + xpp * Ax;
    Complex eiv = std::polar(1.0, v);
    Complex ieiv = Complex(0, 1) * eiv;
    Jet2 j;
    j.f = eiv * A;
    j.fu = eiv * Au;
    j.fv = ieiv * A;
    j.fuu = eiv * Auu;
    j.fuv = ieiv * Au;
    j.fvv = Complex(-1, 0) * (eiv * A);
    return j;
  };
  imm.exact_jet = jet;
  imm.evaluate = [jet](double u, double v) { return jet(u, v).f; };
  return imm;
}

Immersion make_type2_flat(double r) {
  if (r < 0) fail(ErrorCode::InvalidParameter, "r must be nonnegative");

  Immersion imm;
  imm.space = flat_c21();
  imm.chart = {-kPi, kPi, -1, 1};
  imm.name = "type2-flat";
  imm.params = {{"r", r}};

  if (r == 0) {
    CVec A1{Complex(1 / kSqrt2, 0), Complex(1 / kSqrt2, 0)};
    CVec A2{Complex(0, 1 / kSqrt2), Complex(0, -1 / kSqrt2)};
    auto jet = [A1, A2](double u, double v) {
      Complex eiu = std::polar(1.0, u);
      Complex ieiu = Complex(0, 1) * eiu;
      CVec g = v * A1 + A2;
      Jet2 j;
      j.f = eiu * g;
      j.fu = ieiu * g;
      j.fv = eiu * A1;
      j.fuu = Complex(-1, 0) * (eiu * g);
      j.fuv = ieiu * A1;
      j.fvv = zero_vec(2);
      return j;
    };
    imm.exact_jet = jet;
    imm.evaluate = [jet](double u, double v) { return jet(u, v).f; };
    return imm;
  }

  CVec A1{Complex(-kSqrt2 / (4 * r), 0), Complex(kSqrt2 / (4 * r), 0)};
  CVec A2{Complex(1, -2 * r) / Complex(2 * kSqrt2 * r, 0),
          Complex(-1, -2 * r) / Complex(2 * kSqrt2 * r, 0)};
  auto jet = [A1, A2, r](double u, double v) {
    double ep = std::exp(r * v), em = std::exp(-r * v);
    CVec g1 = ep * A1 + em * A2;
    CVec g2 = ep * A1 - em * A2;
    Complex eiu = std::polar(1.0, u);
    Complex ieiu = Complex(0, 1) * eiu;
    Jet2 j;
    j.f = eiu * g1 + g2;
    j.fu = ieiu * g1;
    j.fv = r * (eiu * g2) + r * g1;
    j.fuu = Complex(-1, 0) * (eiu * g1);
    j.fuv = ieiu * (r * g2);
    j.fvv = (r * r) * (eiu * g1) + (r * r) * g2;
    return j;
  };
  imm.exact_jet = jet;
  imm.evaluate = [jet](double u, double v) { return jet(u, v).f; };
  return imm;
}

Immersion make_type2_cp(double r) {
  if (r < 0) fail(ErrorCode::InvalidParameter, "r must be nonnegative");

  const Complex i(0, 1);
  const CVec c1{Complex(0, -1 / kSqrt2), Complex(0, -1 / kSqrt2), Complex(0, 0)};
  const CVec c2{Complex(0, 1 / kSqrt2), Complex(0, 1 / kSqrt2), Complex(1, 0)};
  const CVec c3{Complex(-1 / kSqrt2, r / kSqrt2), Complex(1 / kSqrt2, r / kSqrt2),
                Complex(0, 1)};

  // Profile curves a1(v), a2(v) with two derivatives; the surface is
  // f = a1 e^{iu} + a2.
  std::function<std::array<CVec, 6>(double)> profile;

  if (r < 1) {
    double s = std::sqrt(1 - r * r);
    CVec P1 = (-s) * c3;
    CVec Q1 = (r * r) * c1 + i * c3 + Complex(0, -r) * c2;
    CVec K1 = Complex(0, r) * c2 - c1 - i * c3;
    CVec P2 = s * (i * c2 - r * c1);
    CVec Q2 = r * c3 + Complex(0, -r) * c1 - c2;
    CVec K2 = (r * r) * c2 + Complex(0, r) * c1 - r * c3;
    profile = [=](double v) -> std::array<CVec, 6> {
      double sn = std::sin(s * v), cs = std::cos(s * v), s2 = s * s;
      CVec a1 = (-1 / s2) * (sn * P1 + cs * Q1 + K1);
      CVec a1p = (-1 / s) * (cs * P1 - sn * Q1);
      CVec a1pp = sn * P1 + cs * Q1;
      CVec a2 = (-1 / s2) * (sn * P2 + cs * Q2 + K2);
      CVec a2p = (-1 / s) * (cs * P2 - sn * Q2);
      CVec a2pp = sn * P2 + cs * Q2;
      return {a1, a1p, a1pp, a2, a2p, a2pp};
    };
  } else if (r == 1) {
    CVec C1a = c1 - i * c2 + i * c3;
    CVec C2a = c3 - i * c1 - c2;
    CVec L2 = c1 - i * c2;
    profile = [=](double v) -> std::array<CVec, 6> {
      CVec a1 = 0.5 * ((v * v) * C1a + (2 * v) * c3 + 2.0 * c1);
      CVec a1p = v * C1a + c3;
      CVec a2 = 0.5 * ((v * v) * C2a + (2 * v) * L2 + 2.0 * c2);
      CVec a2p = v * C2a + L2;
      return {a1, a1p, C1a, a2, a2p, C2a};
    };
  } else {
    double s = std::sqrt(r * r - 1);
    CVec P1 = s * c3;
    CVec Q1 = (r * r) * c1 + Complex(0, -r) * c2 + i * c3;
    CVec K1 = Complex(0, r) * c2 - c1 - i * c3;
    CVec P2 = s * (r * c1 - i * c2);
    CVec Q2 = r * c3 + Complex(0, -r) * c1 - c2;
    CVec K2 = (r * r) * c2 + Complex(0, r) * c1 - r * c3;
    profile = [=](double v) -> std::array<CVec, 6> {
      double sh = std::sinh(s * v), ch = std::cosh(s * v), s2 = s * s;
      CVec a1 = (1 / s2) * (sh * P1 + ch * Q1 + K1);
      CVec a1p = (1 / s) * (ch * P1 + sh * Q1);
      CVec a1pp = sh * P1 + ch * Q1;
      CVec a2 = (1 / s2) * (sh * P2 + ch * Q2 + K2);
      CVec a2p = (1 / s) * (ch * P2 + sh * Q2);
      CVec a2pp = sh * P2 + ch * Q2;
      return {a1, a1p, a1pp, a2, a2p, a2pp};
    };
  }

  Immersion imm;
  imm.space = sphere_lift_s52();
  imm.chart = {-kPi, kPi, -1, 1};
  imm.name = "type2-cp";
  imm.params = {{"r", r}};
  auto jet = [profile](double u, double v) {
    std::array<CVec, 6> pr = profile(v);
    Complex eiu = std::polar(1.0, u);
    Complex ieiu = Complex(0, 1) * eiu;
    Jet2 j;
    j.f = eiu * pr[0] + pr[3];
    j.fu = ieiu * pr[0];
    j.fv = eiu * pr[1] + pr[4];
    j.fuu = Complex(-1, 0) * (eiu * pr[0]);
    j.fuv = ieiu * pr[1];
    j.fvv = eiu * pr[2] + pr[5];
    return j;
  };
  imm.exact_jet = jet;
  imm.evaluate = [jet](double u, double v) { return jet(u, v).f; };
  return imm;
}

ProjectedGeometry projected_geometry(const AmbientSpace& space, const Jet2& jet,
                                     double sphere_tol) {
  if (space.kind != AmbientKind::SphereLiftS52)
    fail(ErrorCode::WrongAmbient, "projection needs the sphere-lift ambient");
  double sd = sphere_defect(space, jet.f);
  if (sd > sphere_tol)
    fail(ErrorCode::NotOnSphere,
         "point is off the unit sphere by " + std::to_string(sd));
  double hd = horizontality_defect(space, jet.f, jet.fu, jet.fv);
  if (hd > sphere_tol)
    fail(ErrorCode::NotHorizontal,
         "tangent plane fails horizontality by " + std::to_string(hd));

  ProjectedGeometry pg;
  FirstFundamental g = induced_metric(space, jet);
  pg.frame = null_frame(jet, g);
  pg.h = second_fundamental(space, jet, pg.frame);
  return pg;
}

}  // namespace lagiso

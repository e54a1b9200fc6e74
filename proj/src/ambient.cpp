#include "lagiso/ambient.hpp"

#include <cmath>

namespace lagiso {

namespace {

void check_dim(const AmbientSpace& space, const CVec& z, const char* who) {
  if (static_cast<int>(z.size()) != space.q())
    fail(ErrorCode::DimensionMismatch,
         std::string(who) + ": vector length " + std::to_string(z.size()) +
             " does not match ambient dimension " + std::to_string(space.q()));
}

}  // namespace

CVec operator+(const CVec& a, const CVec& b) {
  CVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

CVec operator-(const CVec& a, const CVec& b) {
  CVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

CVec operator*(Complex s, const CVec& a) {
  CVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

CVec operator*(double s, const CVec& a) { return Complex(s, 0) * a; }

CVec& operator+=(CVec& a, const CVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

CVec& operator-=(CVec& a, const CVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

double euclid_norm(const CVec& a) {
  double s = 0;
  for (const auto& z : a.e) s += std::norm(z);
  return std::sqrt(s);
}

Complex euclid_dot(const CVec& a, const CVec& b) {
  Complex s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s;
}

Complex herm(const AmbientSpace& space, const CVec& z, const CVec& w) {
  check_dim(space, z, "herm");
  check_dim(space, w, "herm");
  Complex s = -z[0] * std::conj(w[0]);
  for (std::size_t k = 1; k < z.size(); ++k) s += z[k] * std::conj(w[k]);
  return s;
}

double inner(const AmbientSpace& space, const CVec& z, const CVec& w) {
  return herm(space, z, w).real();
}

CVec jmul(const CVec& z) { return Complex(0, 1) * z; }

CausalCharacter causal_character(const AmbientSpace& space, const CVec& v,
                                 double tol) {
  check_dim(space, v, "causal_character");
  double n = euclid_norm(v);
  if (n == 0) return CausalCharacter::Lightlike;
  CVec unit = (1.0 / n) * v;
  double q = inner(space, unit, unit);
  if (q > tol) return CausalCharacter::Spacelike;
  if (q < -tol) return CausalCharacter::Timelike;
  return CausalCharacter::Lightlike;
}

double sphere_defect(const AmbientSpace& space, const CVec& z) {
  if (space.kind != AmbientKind::SphereLiftS52)
    fail(ErrorCode::WrongAmbient, "sphere_defect needs the sphere-lift ambient");
  return std::abs(herm(space, z, z) - Complex(1, 0));
}

double horizontality_defect(const AmbientSpace& space, const CVec& f,
                            const CVec& fu, const CVec& fv) {
  if (space.kind != AmbientKind::SphereLiftS52)
    fail(ErrorCode::WrongAmbient,
         "horizontality_defect needs the sphere-lift ambient");
  CVec jf = jmul(f);
  return std::max(std::abs(inner(space, jf, fu)),
                  std::abs(inner(space, jf, fv)));
}

}  // namespace lagiso

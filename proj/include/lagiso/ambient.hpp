#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "lagiso/error.hpp"

namespace lagiso {

using Complex = std::complex<double>;

// Complex coordinate vector in C^q. Entry 0 is the one the indefinite form
// counts negatively.
struct CVec {
  std::vector<Complex> e;

  CVec() = default;
  explicit CVec(std::size_t q) : e(q) {}
  CVec(std::initializer_list<Complex> xs) : e(xs) {}

  std::size_t size() const { return e.size(); }
  Complex& operator[](std::size_t i) { return e[i]; }
  const Complex& operator[](std::size_t i) const { return e[i]; }
};

CVec operator+(const CVec& a, const CVec& b);
CVec operator-(const CVec& a, const CVec& b);
CVec operator*(Complex s, const CVec& a);
CVec operator*(double s, const CVec& a);
CVec& operator+=(CVec& a, const CVec& b);
CVec& operator-=(CVec& a, const CVec& b);

// Sign-blind Euclidean norm sqrt(sum |z_i|^2); used for residual reporting
// because the indefinite norm of a lightlike defect vanishes identically.
double euclid_norm(const CVec& a);
// sum a_i * conj(b_i)
Complex euclid_dot(const CVec& a, const CVec& b);

enum class AmbientKind { FlatC21, SphereLiftS52 };

// The two ambient models: flat C^2 with an index-1 Hermitian form (c = 0),
// and the unit sphere with two timelike real directions inside C^3 carrying
// the same kind of form. The sphere quotients to the indefinite complex
// projective plane of holomorphic sectional curvature 4 (c = 1); computations
// happen on horizontal lifts upstairs.
struct AmbientSpace {
  AmbientKind kind = AmbientKind::FlatC21;

  int q() const { return kind == AmbientKind::FlatC21 ? 2 : 3; }
  double c() const { return kind == AmbientKind::FlatC21 ? 0.0 : 1.0; }
  const char* name() const {
    return kind == AmbientKind::FlatC21 ? "flat" : "sphere-lift";
  }
};

inline AmbientSpace flat_c21() { return {AmbientKind::FlatC21}; }
inline AmbientSpace sphere_lift_s52() { return {AmbientKind::SphereLiftS52}; }

enum class CausalCharacter { Timelike, Lightlike, Spacelike };

inline const char* to_string(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::Timelike:  return "Timelike";
    case CausalCharacter::Lightlike: return "Lightlike";
    case CausalCharacter::Spacelike: return "Spacelike";
  }
  return "Unknown";
}

// Index-1 Hermitian form: -z_1 conj(w_1) + sum_{k>=2} z_k conj(w_k).
Complex herm(const AmbientSpace& space, const CVec& z, const CVec& w);

// Real part of herm — the pseudo-Riemannian pairing the geometry runs on.
double inner(const AmbientSpace& space, const CVec& z, const CVec& w);

// The complex structure: multiplication by i, entrywise.
CVec jmul(const CVec& z);

// Classifies v by the sign of inner(v,v) after scaling v to Euclidean unit
// length, so the verdict is invariant under real rescaling. Zero vector
// counts as Lightlike.
CausalCharacter causal_character(const AmbientSpace& space, const CVec& v,
                                 double tol = 1e-9);

// |herm(z,z) - 1| — membership residual for the unit lift sphere.
// Sphere-lift ambient only.
double sphere_defect(const AmbientSpace& space, const CVec& z);

// max(|inner(i f, fu)|, |inner(i f, fv)|) — obstruction to the tangent plane
// at f being horizontal for the circle fibration. Sphere-lift ambient only.
double horizontality_defect(const AmbientSpace& space, const CVec& f,
                            const CVec& fu, const CVec& fv);

}  // namespace lagiso

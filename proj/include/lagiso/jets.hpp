#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lagiso/ambient.hpp"
#include "lagiso/report.hpp"

namespace lagiso {

// Full 2-jet of the immersion at a point: position, first and second partials.
struct Jet2 {
  CVec f, fu, fv, fuu, fuv, fvv;
};

struct Chart {
  double u0 = -1, u1 = 1, v0 = -1, v1 = 1;
  bool contains(double u, double v, double margin = 0) const {
    return u >= u0 + margin && u <= u1 - margin && v >= v0 + margin &&
           v <= v1 - margin;
  }
};

// A parametrized surface patch. evaluate is always present; exact_jet carries
// the closed-form 2-jet when the family has one. Both are pure functions of
// (u,v), so Immersion values can be shared freely across threads.
struct Immersion {
  AmbientSpace space;
  Chart chart;
  std::string name;
  std::map<std::string, double> params;
  std::map<std::string, std::string> labels;
  std::function<CVec(double, double)> evaluate;
  std::function<Jet2(double, double)> exact_jet;  // empty when unavailable

  bool has_exact_jet() const { return static_cast<bool>(exact_jet); }
};

enum class JetScheme { Exact, FiniteDifference };

inline constexpr double kDefaultFdStep = 1e-4;

// Exact returns the closed-form jet (chart membership required).
// FiniteDifference rebuilds the jet from second-order central differences of
// evaluate with step h, which needs the point at margin >= 2h inside the
// chart. Three-point second differences for fuu/fvv, four corners for fuv.
Jet2 eval_jet2(const Immersion& imm, double u, double v, JetScheme scheme,
               double h = kDefaultFdStep);

// Compares FD jets against exact jets at the given points. One check per jet
// slot, each reporting the max Euclidean deviation over the points and the
// witness point that attained it.
VerificationReport fd_validate(const Immersion& imm,
                               const std::vector<std::pair<double, double>>& points,
                               double h = kDefaultFdStep, double tol = 1e-6);

}  // namespace lagiso

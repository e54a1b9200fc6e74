#pragma once

#include <optional>
#include <string>

#include "lagiso/families.hpp"
#include "lagiso/frameflow.hpp"
#include "lagiso/isotropy.hpp"
#include "lagiso/report.hpp"

namespace lagiso {

// A family member together with everything the verifier should hold it to.
struct FamilyInstance {
  Immersion imm;
  PointType expected_type = PointType::Minimal;
  std::optional<PdeSystem> system;
  bool is_lift = false;    // sphere membership / horizontality / base point
  double r = 0;            // frame amplitude for the ruled families
  bool fit_phase = false;  // recovered lambda should be a phase of r sin u
};

FamilyInstance plane_instance();
FamilyInstance type1_instance(const CurveFn& alpha, const CurveFn& beta);
FamilyInstance type2_flat_instance(double r);
FamilyInstance type2_cp_instance(double r);

struct VerifyOptions {
  int nu = 21, nv = 21;

  double tol_iso = 1e-6;      // pseudo-isotropy / classification decisions
  double tol_exact = 1e-12;   // identities exact up to rounding
  double tol_frame = 1e-10;   // null frame normalization
  double tol_alg = 1e-8;      // pointwise algebraic identities
  double tol_fd = 1e-6;       // finite differences against exact jets
  double tol_codazzi = 1e-4;  // differenced covariant-derivative symmetry
  double tol_gauss = 1e-3;    // differenced curvature identity
  double tol_pde = 1e-9;      // characterizing systems on exact jets
  double tol_sphere = 1e-10;  // lift integrity
  double tol_minimal = 1e-9;  // mean curvature of minimal members
  double tol_phase = 1e-6;    // lambda phase fit
  double min_mean_norm = 0.5; // properness of the non-minimal families

  double fd_step = 1e-4;
  double diff_step = 1e-3;
  double margin = 0.05;  // chart inset for differenced checks
};

// 1e-6 unless the LAGISO_TOL environment variable parses as a positive
// double.
double default_iso_tol();

VerificationReport run_verification(const FamilyInstance& fam,
                                    const VerifyOptions& opt = {});

// Deterministic CSV sampling: u,v, the components of f, the induced metric,
// and the frame function recovered from h(E2,E2).
std::string sample_csv(const FamilyInstance& fam, int nu, int nv);

struct IntegrationReport {
  double c = 0, r = 0, step = 0;
  std::size_t steps = 0;
  double max_deviation = 0;  // against the closed-form trajectory
  double drift = 0;          // of the conserved amplitude
  bool pass = false;         // max_deviation <= 1e-8 and drift <= 1e-9
  std::string to_json() const;
};

IntegrationReport run_integration(double c, double r, double u0, double u1,
                                  double step);

}  // namespace lagiso

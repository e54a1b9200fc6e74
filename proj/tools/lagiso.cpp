#include <cstdio>
#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "lagiso/error.hpp"
#include "lagiso/verify.hpp"

using namespace lagiso;

namespace {

struct FamilyArgs {
  std::string family;
  double r = 0;
  std::string alpha = "sin";
  std::string beta = "cos";
};

void add_family_flags(CLI::App* cmd, FamilyArgs& fa) {
  cmd->add_option("--family", fa.family, "plane | type1 | type2-flat | type2-cp")
      ->required()
      ->check(CLI::IsMember({"plane", "type1", "type2-flat", "type2-cp"}));
  cmd->add_option("--r", fa.r, "frame amplitude for the type2 families");
  cmd->add_option("--alpha", fa.alpha,
                  "first type1 curve: sin | cos | exp | poly:c0,c1,...");
  cmd->add_option("--beta", fa.beta, "second type1 curve");
}

FamilyInstance build_family(const FamilyArgs& fa) {
  if (fa.family == "plane") return plane_instance();
  if (fa.family == "type1")
    return type1_instance(parse_curve(fa.alpha), parse_curve(fa.beta));
  if (fa.family == "type2-flat") return type2_flat_instance(fa.r);
  if (fa.family == "type2-cp") return type2_cp_instance(fa.r);
  fail(ErrorCode::InvalidParameter, "unknown family '" + fa.family + "'");
}

bool parse_grid(const std::string& text, int& nu, int& nv) {
  std::size_t x = text.find('x');
  if (x == std::string::npos || x == 0 || x + 1 >= text.size()) return false;
  try {
    std::size_t used = 0;
    nu = std::stoi(text.substr(0, x), &used);
    if (used != x) return false;
    nv = std::stoi(text.substr(x + 1), &used);
    if (used != text.size() - x - 1) return false;
  } catch (const std::exception&) {
    return false;
  }
  return nu >= 2 && nv >= 2;
}

bool write_out(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::fputs(content.c_str(), stdout);
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::fprintf(stderr, "error: cannot open '%s' for writing\n", path.c_str());
    return false;
  }
  f << content;
  return f.good();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"residual checks for Lorentzian Lagrangian surface families"};
  app.require_subcommand(1);
  app.set_config("--config");

  FamilyArgs vfa, sfa;
  std::string vgrid = "21x21", sgrid = "21x21";
  std::string vjson, sout, ijson;
  double vtol = default_iso_tol();

  CLI::App* vcmd =
      app.add_subcommand("verify", "run every check on one family member");
  add_family_flags(vcmd, vfa);
  vcmd->add_option("--grid", vgrid, "evaluation grid, e.g. 21x21");
  vcmd->add_option("--json", vjson, "write the report here instead of stdout");
  vcmd->add_option("--tol", vtol, "decision tolerance for the isotropy tests");

  CLI::App* scmd =
      app.add_subcommand("sample", "print a CSV sample of one family member");
  add_family_flags(scmd, sfa);
  scmd->add_option("--grid", sgrid, "sampling grid, e.g. 21x21");
  scmd->add_option("--out", sout, "write the CSV here instead of stdout");

  double ic = 1, ir = 1, iu0 = 0, iu1 = 6.283185307179586, istep = 1e-3;
  CLI::App* icmd = app.add_subcommand(
      "integrate", "integrate the frame equations against the closed form");
  icmd->add_option("--c", ic, "curvature scale, 0 or 1");
  icmd->add_option("--r", ir, "amplitude of the closed-form solution");
  icmd->add_option("--u0", iu0, "start of the integration range");
  icmd->add_option("--u1", iu1, "end of the integration range");
  icmd->add_option("--step", istep, "RK4 step size");
  icmd->add_option("--json", ijson, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*vcmd) {
      int nu = 0, nv = 0;
      if (!parse_grid(vgrid, nu, nv)) {
        std::fprintf(stderr, "error: bad grid '%s' (expected NxM, N,M >= 2)\n",
                     vgrid.c_str());
        return 2;
      }
      if (!(vtol > 0)) {
        std::fprintf(stderr, "error: tolerance must be positive\n");
        return 2;
      }
      FamilyInstance fam;
      try {
        fam = build_family(vfa);
      } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
      }
      VerifyOptions opt;
      opt.nu = nu;
      opt.nv = nv;
      opt.tol_iso = vtol;
      VerificationReport rep = run_verification(fam, opt);
      if (!write_out(vjson, rep.to_json())) return 1;
      if (!vjson.empty())
        std::printf("%s: %s\n", rep.family.c_str(),
                    rep.overall_pass() ? "PASS" : "FAIL");
      return rep.overall_pass() ? 0 : 1;
    }

    if (*scmd) {
      int nu = 0, nv = 0;
      if (!parse_grid(sgrid, nu, nv)) {
        std::fprintf(stderr, "error: bad grid '%s' (expected NxM, N,M >= 2)\n",
                     sgrid.c_str());
        return 2;
      }
      FamilyInstance fam;
      try {
        fam = build_family(sfa);
      } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
      }
      return write_out(sout, sample_csv(fam, nu, nv)) ? 0 : 1;
    }

    if (*icmd) {
      if (!(ic == 0 || ic == 1)) {
        std::fprintf(stderr, "error: --c must be 0 or 1\n");
        return 2;
      }
      if (ir < 0) {
        std::fprintf(stderr, "error: --r must be nonnegative\n");
        return 2;
      }
      if (!(istep > 0)) {
        std::fprintf(stderr, "error: --step must be positive\n");
        return 2;
      }
      if (!(iu1 >= iu0)) {
        std::fprintf(stderr, "error: need --u1 >= --u0\n");
        return 2;
      }
      IntegrationReport rep = run_integration(ic, ir, iu0, iu1, istep);
      if (!write_out(ijson, rep.to_json())) return 1;
      if (!ijson.empty())
        std::printf("integrate: %s\n", rep.pass ? "PASS" : "FAIL");
      return rep.pass ? 0 : 1;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}

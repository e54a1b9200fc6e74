#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lagiso {

inline constexpr const char* kArtifactVersion = "1.0.0";

// Grid the report was evaluated on (inclusive endpoints).
struct GridSpec {
  int nu = 0, nv = 0;
  double u0 = 0, u1 = 0, v0 = 0, v1 = 0;
};

// One named residual check. pass <=> max_residual <= tol. Count-style checks
// (classification mismatches etc.) store the count as the residual with
// tol = 0. witness is the grid point that attained the max, when meaningful.
struct CheckResult {
  std::string name;
  double max_residual = 0;
  double tol = 0;
  bool pass = true;
  std::optional<std::pair<double, double>> witness;
};

struct VerificationReport {
  std::string family;
  std::map<std::string, double> params;        // ordered -> stable output
  std::map<std::string, std::string> labels;   // e.g. curve names for type1
  GridSpec grid;
  std::vector<CheckResult> checks;

  bool overall_pass() const;
  const CheckResult* find(const std::string& name) const;
  // Deterministic JSON: fixed key order, floats at 17 significant digits.
  std::string to_json() const;
};

// Shared float formatting (17 significant digits) so JSON and CSV output are
// byte-identical across runs.
std::string format_double(double x);

// Minimal ordered JSON emitter. Only what the reports need: objects, arrays,
// strings, doubles, ints, bools. Two-space indentation, LF line ends.
class JsonWriter {
 public:
  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  void key(const std::string& k);
  void value(const std::string& s);
  void value(const char* s);
  void value(double x);
  void value(int x);
  void value(bool b);
  std::string str() const { return out_; }

 private:
  void pad();
  void separate();  // comma/newline before a new element if needed
  std::string out_;
  int depth_ = 0;
  bool need_comma_ = false;
  bool after_key_ = false;
};

}  // namespace lagiso

#include "lagiso/report.hpp"

#include <cmath>
#include <cstdio>

namespace lagiso {

std::string format_double(double x) {
  if (x == 0) x = 0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

bool VerificationReport::overall_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void JsonWriter::pad() {
  for (int i = 0; i < depth_; ++i) out_ += "  ";
}

void JsonWriter::separate() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (need_comma_) out_ += ",";
  if (depth_ > 0) out_ += "\n";
  pad();
}

void JsonWriter::begin_object() {
  separate();
  out_ += "{";
  ++depth_;
  need_comma_ = false;
}

void JsonWriter::end_object() {
  --depth_;
  out_ += "\n";
  pad();
  out_ += "}";
  need_comma_ = true;
}

void JsonWriter::begin_array() {
  separate();
  out_ += "[";
  ++depth_;
  need_comma_ = false;
}

void JsonWriter::end_array() {
  --depth_;
  out_ += "\n";
  pad();
  out_ += "]";
  need_comma_ = true;
}

void JsonWriter::key(const std::string& k) {
  separate();
  out_ += "\"" + k + "\": ";
  need_comma_ = true;
  after_key_ = true;
}

void JsonWriter::value(const std::string& s) {
  separate();
  out_ += "\"";
  for (char ch : s) {
    switch (ch) {
      case '"':  out_ += "\\\""; break;
      case '\\': out_ += "\\\\"; break;
      case '\n': out_ += "\\n"; break;
      case '\t': out_ += "\\t"; break;
      default:   out_ += ch;
    }
  }
  out_ += "\"";
  need_comma_ = true;
}

void JsonWriter::value(const char* s) { value(std::string(s)); }

void JsonWriter::value(double x) {
  separate();
  out_ += format_double(x);
  need_comma_ = true;
}

void JsonWriter::value(int x) {
  separate();
  out_ += std::to_string(x);
  need_comma_ = true;
}

void JsonWriter::value(bool b) {
  separate();
  out_ += b ? "true" : "false";
  need_comma_ = true;
}

std::string VerificationReport::to_json() const {
  JsonWriter w;
  w.begin_object();
  w.key("artifact_version");
  w.value(kArtifactVersion);
  w.key("family");
  w.value(family);
  w.key("params");
  w.begin_object();
  for (const auto& [k, v] : params) {
    w.key(k);
    w.value(v);
  }
  w.end_object();
  if (!labels.empty()) {
    w.key("labels");
    w.begin_object();
    for (const auto& [k, v] : labels) {
      w.key(k);
      w.value(v);
    }
    w.end_object();
  }
  w.key("grid");
  w.begin_object();
  w.key("nu");
  w.value(grid.nu);
  w.key("nv");
  w.value(grid.nv);
  w.key("u0");
  w.value(grid.u0);
  w.key("u1");
  w.value(grid.u1);
  w.key("v0");
  w.value(grid.v0);
  w.key("v1");
  w.value(grid.v1);
  w.end_object();
  w.key("checks");
  w.begin_array();
  for (const auto& c : checks) {
    w.begin_object();
    w.key("name");
    w.value(c.name);
    w.key("max_residual");
    w.value(c.max_residual);
    w.key("tol");
    w.value(c.tol);
    w.key("pass");
    w.value(c.pass);
    if (c.witness) {
      w.key("witness");
      w.begin_object();
      w.key("u");
      w.value(c.witness->first);
      w.key("v");
      w.value(c.witness->second);
      w.end_object();
    }
    w.end_object();
  }
  w.end_array();
  w.key("overall_pass");
  w.value(overall_pass());
  w.end_object();
  std::string s = w.str();
  s += "\n";
  return s;
}

}  // namespace lagiso

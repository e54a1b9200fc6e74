#pragma once

#include <stdexcept>
#include <string>

namespace lagiso {

enum class ErrorCode {
  DimensionMismatch,
  WrongAmbient,
  OutOfChart,
  NoExactJet,
  NotLorentzian,
  DegenerateTangent,
  NullVector,
  NotLightlikeIsotropic,
  DegenerateCurve,
  InvalidParameter,
  NumericalBlowup,
  NotOnSphere,
  NotHorizontal,
  SystemMismatch,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch:     return "DimensionMismatch";
    case ErrorCode::WrongAmbient:          return "WrongAmbient";
    case ErrorCode::OutOfChart:            return "OutOfChart";
    case ErrorCode::NoExactJet:            return "NoExactJet";
    case ErrorCode::NotLorentzian:         return "NotLorentzian";
    case ErrorCode::DegenerateTangent:     return "DegenerateTangent";
    case ErrorCode::NullVector:            return "NullVector";
    case ErrorCode::NotLightlikeIsotropic: return "NotLightlikeIsotropic";
    case ErrorCode::DegenerateCurve:       return "DegenerateCurve";
    case ErrorCode::InvalidParameter:      return "InvalidParameter";
    case ErrorCode::NumericalBlowup:       return "NumericalBlowup";
    case ErrorCode::NotOnSphere:           return "NotOnSphere";
    case ErrorCode::NotHorizontal:         return "NotHorizontal";
    case ErrorCode::SystemMismatch:        return "SystemMismatch";
  }
  return "Unknown";
}

// Every operation whose precondition fails throws this; the code is stable so
// callers (and the CLI exit mapping) never have to match message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace lagiso

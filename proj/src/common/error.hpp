#pragma once

#include <stdexcept>
#include <string>

namespace krh {

enum class ErrorCode {
  Ok = 0,
  NotDivisible,
  InhomogeneousBinding,
  LevelMismatch,
  DegreeViolation,
  NotExcludable,
  PotentialNonzero,
  AmbientMismatch,
  ImageNotCocycle,
  UnknownVariable,
  InvalidGraph,
  UnknownName,
  InvalidDiagram,
  InconsistentOrientation,
  ParseError,
  GeneratorOutOfRange,
  IrreducibleGraph,
  RecursionDepthExceeded,
  Internal,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
public:
  Error(ErrorCode c, const std::string& msg)
      : std::runtime_error(std::string(error_name(c)) + ": " + msg), code_(c) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
  case ErrorCode::Ok: return "Ok";
  case ErrorCode::NotDivisible: return "NotDivisible";
  case ErrorCode::InhomogeneousBinding: return "InhomogeneousBinding";
  case ErrorCode::LevelMismatch: return "LevelMismatch";
  case ErrorCode::DegreeViolation: return "DegreeViolation";
  case ErrorCode::NotExcludable: return "NotExcludable";
  case ErrorCode::PotentialNonzero: return "PotentialNonzero";
  case ErrorCode::AmbientMismatch: return "AmbientMismatch";
  case ErrorCode::ImageNotCocycle: return "ImageNotCocycle";
  case ErrorCode::UnknownVariable: return "UnknownVariable";
  case ErrorCode::InvalidGraph: return "InvalidGraph";
  case ErrorCode::UnknownName: return "UnknownName";
  case ErrorCode::InvalidDiagram: return "InvalidDiagram";
  case ErrorCode::InconsistentOrientation: return "InconsistentOrientation";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::GeneratorOutOfRange: return "GeneratorOutOfRange";
  case ErrorCode::IrreducibleGraph: return "IrreducibleGraph";
  case ErrorCode::RecursionDepthExceeded: return "RecursionDepthExceeded";
  case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

} // namespace krh

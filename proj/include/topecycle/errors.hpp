#pragma once

#include <stdexcept>
#include <string>

namespace topecycle {

enum class Errc {
  ParseError,
  UnsupportedField,
  DuplicateHyperplane,
  FieldMismatch,
  LengthMismatch,
  DropAll,
  ZeroDenominator,
  InvalidInput,
  InvalidPositiveSystem,
  NotSimplicialCone,
  DegenerateDirection,
  NotSimplicial,
  TieDetected,
  SizeLimit,
  NotAPath,
  NotSupersolvable,
  EdgeNotInCycle,
  QuadrilateralExhausted,
  IoError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::DuplicateHyperplane: return "DuplicateHyperplane";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::DropAll: return "DropAll";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::InvalidPositiveSystem: return "InvalidPositiveSystem";
    case Errc::NotSimplicialCone: return "NotSimplicialCone";
    case Errc::DegenerateDirection: return "DegenerateDirection";
    case Errc::NotSimplicial: return "NotSimplicial";
    case Errc::TieDetected: return "TieDetected";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::NotAPath: return "NotAPath";
    case Errc::NotSupersolvable: return "NotSupersolvable";
    case Errc::EdgeNotInCycle: return "EdgeNotInCycle";
    case Errc::QuadrilateralExhausted: return "QuadrilateralExhausted";
    case Errc::IoError: return "IoError";
  }
  return "Error";
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace topecycle

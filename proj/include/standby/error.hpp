#pragma once

#include <stdexcept>
#include <string>

namespace standby {

enum class Errc {
  MissingFile,
  IoError,
  MalformedRow,
  DanglingReference,
  NonMonotoneStopTimes,
  UnknownStop,
  UnseenLevel,
  SingleClassData,
  LengthMismatch,
  EmptyInput,
  EmptyCalibrator,
  EmptySample,
  InvalidProbability,
  InconsistentChain,
  InfeasiblePlan,
  NotEnoughCandidates,
  NoSpareCandidates,
  NonPositiveTemperature,
  MissingAgencyPlan,
  MissingContext,
  ConfigInvalid,
  SchemaViolation,
  Internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MissingFile: return "MissingFile";
    case Errc::IoError: return "IoError";
    case Errc::MalformedRow: return "MalformedRow";
    case Errc::DanglingReference: return "DanglingReference";
    case Errc::NonMonotoneStopTimes: return "NonMonotoneStopTimes";
    case Errc::UnknownStop: return "UnknownStop";
    case Errc::UnseenLevel: return "UnseenLevel";
    case Errc::SingleClassData: return "SingleClassData";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::EmptyCalibrator: return "EmptyCalibrator";
    case Errc::EmptySample: return "EmptySample";
    case Errc::InvalidProbability: return "InvalidProbability";
    case Errc::InconsistentChain: return "InconsistentChain";
    case Errc::InfeasiblePlan: return "InfeasiblePlan";
    case Errc::NotEnoughCandidates: return "NotEnoughCandidates";
    case Errc::NoSpareCandidates: return "NoSpareCandidates";
    case Errc::NonPositiveTemperature: return "NonPositiveTemperature";
    case Errc::MissingAgencyPlan: return "MissingAgencyPlan";
    case Errc::MissingContext: return "MissingContext";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::SchemaViolation: return "SchemaViolation";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

/// Library-wide exception. `code()` identifies the failure class so callers
/// (and the CLI exit-code mapping) can react without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace standby

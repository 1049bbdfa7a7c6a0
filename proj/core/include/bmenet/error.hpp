#pragma once

#include <stdexcept>
#include <string>

namespace bmenet {

enum class ErrorCode {
  NotAPermutation,
  AmbientMismatch,
  CrossingBridges,
  TrivialBridge,
  TooManyBridges,
  NotAnArc,
  NotABridge,
  SameTaxon,
  OutOfRange,
  EmptyInput,
  TrivialSplit,
  WeightSystemMismatch,
  NotKalmanson,
  TooLarge,
  UnweightedGraph,
  BudgetExceeded,
  TooManyBridgesRequested,
  MalformedFile,
  AsymmetricInput,
  NegativeDistance,
};

constexpr const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::CrossingBridges: return "CrossingBridges";
    case ErrorCode::TrivialBridge: return "TrivialBridge";
    case ErrorCode::TooManyBridges: return "TooManyBridges";
    case ErrorCode::NotAnArc: return "NotAnArc";
    case ErrorCode::NotABridge: return "NotABridge";
    case ErrorCode::SameTaxon: return "SameTaxon";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::TrivialSplit: return "TrivialSplit";
    case ErrorCode::WeightSystemMismatch: return "WeightSystemMismatch";
    case ErrorCode::NotKalmanson: return "NotKalmanson";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnweightedGraph: return "UnweightedGraph";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::TooManyBridgesRequested: return "TooManyBridgesRequested";
    case ErrorCode::MalformedFile: return "MalformedFile";
    case ErrorCode::AsymmetricInput: return "AsymmetricInput";
    case ErrorCode::NegativeDistance: return "NegativeDistance";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace bmenet

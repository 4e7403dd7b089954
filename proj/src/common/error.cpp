#include "common/error.hpp"

namespace tanlift {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::VariableMismatch: return "variable mismatch";
    case ErrorCode::MissingAssignment: return "missing assignment";
    case ErrorCode::EpsilonMismatch: return "epsilon mismatch";
    case ErrorCode::NotUnimodular: return "not unimodular";
    case ErrorCode::InexactDivision: return "inexact division";
    case ErrorCode::ChartMismatch: return "chart mismatch";
    case ErrorCode::ValenceMismatch: return "valence mismatch";
    case ErrorCode::MissingConnection: return "missing connection";
    case ErrorCode::MissingMetric: return "missing metric";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::OddDimension: return "odd dimension";
    case ErrorCode::Parse: return "parse error";
  }
  return "unknown error";
}

}  // namespace tanlift

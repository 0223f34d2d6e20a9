#include "symtangle/error.hpp"

namespace symtangle {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NotDensityMatrix: return "NotDensityMatrix";
    case ErrorCode::NumericalInstability: return "NumericalInstability";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ZeroState: return "ZeroState";
    case ErrorCode::Io: return "IoError";
  }
  return "Unknown";
}

}  // namespace symtangle

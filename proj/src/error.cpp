#include "hfp/error.hpp"

namespace hfp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidFiber: return "InvalidFiber";
    case ErrorCode::NotSpecial: return "NotSpecial";
    case ErrorCode::DegenerateGenus: return "DegenerateGenus";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::NonIntegralEta: return "NonIntegralEta";
    case ErrorCode::OffLattice: return "OffLattice";
    case ErrorCode::BoundaryUnsafe: return "BoundaryUnsafe";
    case ErrorCode::IdentityPower: return "IdentityPower";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::BandEmpty: return "BandEmpty";
    case ErrorCode::TorsionExcluded: return "TorsionExcluded";
    case ErrorCode::InternalMismatch: return "InternalMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace hfp

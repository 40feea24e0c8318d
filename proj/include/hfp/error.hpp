#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hfp {

enum class ErrorCode {
  InvalidFiber,
  NotSpecial,
  DegenerateGenus,
  ArityMismatch,
  InvalidLabel,
  NonIntegralEta,
  OffLattice,
  BoundaryUnsafe,
  IdentityPower,
  OrderTooSmall,
  AxiomViolation,
  BandEmpty,
  TorsionExcluded,
  InternalMismatch,
  ParseError,
  Overflow,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hfp

#pragma once

#include <stdexcept>
#include <string>

namespace darbouxkit {

enum class ErrorCode {
  Parse = 1,
  UnknownSymbol,
  UnboundSymbol,
  DivisionByZeroExpr,
  EvalSingularity,
  SingularGauge,
  SeedNotSolution,
  NotTraceless,
  OmegaOneZero,
  NotShapeInvariant,
  UnsupportedOrder,
  RouteConstraintViolated,
  RouteMismatch,
  NotUnitNorm,
  InvalidArgument,
  VerificationFailed,
  Internal
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg, std::string detail = {}, int index = -1)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
      code_(code), detail_(std::move(detail)), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  // extra payload, e.g. the offending residual in canonical form
  const std::string& detail() const noexcept { return detail_; }
  // chain step or grid index where the failure happened, -1 if n/a
  int index() const noexcept { return index_; }

private:
  ErrorCode code_;
  std::string detail_;
  int index_;
};

}

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace supertree {

enum class ErrorCode {
  NonUniformEdge,
  NonLinear,
  DanglingVertexRef,
  NoSuchEdge,
  NoSuchVertex,
  DiameterUndefined,
  RankTooSmall,
  TargetInsideEdge,
  PivotNotInEdge,
  NonLinearResult,
  PendentEdge,
  NotAcyclic,
  BadParams,
  TooLarge,
  RankMismatch,
  RankNotTwo,
  NoPositiveRoot,
  Disconnected,
  NotConverged,
  OrderMismatch,
  BudgetExceeded,
  PreconditionViolated,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception; the code lets
// callers (and the CLI exit-code mapping) distinguish the failure kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace supertree

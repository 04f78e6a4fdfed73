#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gyrofid {

enum class ErrorCode {
  ball_violation,
  dimension_mismatch,
  degenerate_direction,
  not_positive_semidefinite,
  no_convergence,
  invalid_argument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to a structured error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gyrofid

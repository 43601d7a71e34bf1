#ifndef VGEOM_ERROR_HPP
#define VGEOM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace vgeom {

enum class ErrorCode {
  duplicate_label,
  unknown_point,
  duplicate_line,
  repeated_point,
  empty_line,
  capacity_exceeded,
  out_of_range,
  invalid_argument,
  not_a_hyperplane,
  not_closed,
  invariant_violation,
};

std::string_view to_string(ErrorCode code);

/// Thrown on contract violations: malformed input or a failed structural invariant.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vgeom

#endif  // VGEOM_ERROR_HPP

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace biamalg {

enum class ErrorKind {
  invalid_argument,
  size_limit,
  infinite_ring,
  not_a_homomorphism,
  conductor_mismatch,
  generation_failure,
  internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every library failure is reported through this one exception type; the
/// kind distinguishes user errors from internal consistency failures.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace biamalg

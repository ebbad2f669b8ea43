#pragma once

#include <stdexcept>
#include <string>

namespace fzddn {

enum class ErrorKind {
  invalid_dimension,
  invalid_sites,
  invalid_context,
  invalid_pair,
  invalid_point,
  invalid_spec,
  precondition_violation,
  insufficient_samples,
  singular_parameter,
  singular_roots,
  not_applicable,
  resource_limit,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fzddn

#pragma once

#include <stdexcept>
#include <string>

namespace ocs {

// Domain error vocabulary shared by the library, the C API and the CLI.
enum class ErrorKind {
  mismatched_boundary,
  non_commuting_cocone,
  label_conflict,
  rate_conflict,
  not_invertible,
  nonpositive_resistance,
  ill_typed_compose,
  malformed_json,
  schema_violation,
  index_out_of_range,
  duplicate_name,
  invalid_structure,
};

const char* error_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) raise(kind, message);
}

}  // namespace ocs

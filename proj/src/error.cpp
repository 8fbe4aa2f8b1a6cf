#include "opencospan/error.hpp"

namespace ocs {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::mismatched_boundary: return "mismatched-boundary";
    case ErrorKind::non_commuting_cocone: return "non-commuting-cocone";
    case ErrorKind::label_conflict: return "label-conflict";
    case ErrorKind::rate_conflict: return "rate-conflict";
    case ErrorKind::not_invertible: return "not-invertible";
    case ErrorKind::nonpositive_resistance: return "nonpositive-resistance";
    case ErrorKind::ill_typed_compose: return "ill-typed-compose";
    case ErrorKind::malformed_json: return "malformed-json";
    case ErrorKind::schema_violation: return "schema-violation";
    case ErrorKind::index_out_of_range: return "index-out-of-range";
    case ErrorKind::duplicate_name: return "duplicate-name";
    case ErrorKind::invalid_structure: return "invalid-structure";
  }
  return "unknown-error";
}

}  // namespace ocs

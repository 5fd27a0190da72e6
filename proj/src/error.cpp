#include "strata/error.hpp"

namespace strata {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::domain_violation: return "domain_violation";
    case ErrorCode::weight_mismatch: return "weight_mismatch";
    case ErrorCode::missing_label: return "missing_label";
    case ErrorCode::extraneous_label: return "extraneous_label";
    case ErrorCode::bookkeeping: return "bookkeeping";
    case ErrorCode::wrong_family: return "wrong_family";
    case ErrorCode::invalid_orbit: return "invalid_orbit";
    case ErrorCode::unknown_label: return "unknown_label";
    case ErrorCode::ambiguous_label: return "ambiguous_label";
    case ErrorCode::unknown_rep: return "unknown_rep";
    case ErrorCode::malformed_label: return "malformed_label";
    case ErrorCode::no_preimage: return "no_preimage";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::io_error: return "io_error";
    case ErrorCode::consistency: return "consistency";
  }
  return "unknown";
}

}  // namespace strata

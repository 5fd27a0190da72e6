#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace strata {

/// Machine-readable error codes shared by the library and the CLI envelope.
enum class ErrorCode {
  domain_violation,
  weight_mismatch,
  missing_label,
  extraneous_label,
  bookkeeping,
  wrong_family,
  invalid_orbit,
  unknown_label,
  ambiguous_label,
  unknown_rep,
  malformed_label,
  no_preimage,
  parse_error,
  io_error,
  consistency,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Bad input: the caller handed us something outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
  DomainError(const std::string& what) : Error(ErrorCode::domain_violation, what) {}
};

/// A mathematical claim the library relies on failed on concrete data
/// (a bijection that is not injective, a non-unique minimiser, ...).
class ConsistencyError : public Error {
 public:
  ConsistencyError(const std::string& what) : Error(ErrorCode::consistency, what) {}
};

}  // namespace strata

#pragma once

#include <stdexcept>
#include <string>

namespace macdual {

// Every recoverable failure in the library is reported through one of these
// kinds so the CLI can map it onto a structured error artifact and a stable
// exit code.
enum class ErrKind {
  MalformedInput,    // zero denominator, bad label, bad indices, bad request
  Pole,              // specialization or evaluation hit a vanishing factor
  DivergentLimit,    // T->infinity limit does not exist at the given renorm
  Domain,            // object used outside its convergence/cone domain
  NonIntegralShift,  // infinite-product ratio is not a finite product
  NotInvertible,     // series with vanishing constant term, zero division
  DivisionRemainder, // exact polynomial division left a remainder
  Degenerate,        // eigenvalue collision / resonant denominator
  Unsupported,       // parameters outside the supported (monomial) family
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  ErrKind kind() const { return kind_; }
  const char* kind_name() const {
    switch (kind_) {
      case ErrKind::MalformedInput: return "malformed-input";
      case ErrKind::Pole: return "pole";
      case ErrKind::DivergentLimit: return "divergent-limit";
      case ErrKind::Domain: return "domain";
      case ErrKind::NonIntegralShift: return "non-integral-shift";
      case ErrKind::NotInvertible: return "not-invertible";
      case ErrKind::DivisionRemainder: return "division-remainder";
      case ErrKind::Degenerate: return "degenerate";
      case ErrKind::Unsupported: return "unsupported-parameter";
      case ErrKind::Internal: return "internal";
    }
    return "internal";
  }

private:
  ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind k, const std::string& msg) {
  throw Error(k, msg);
}

} // namespace macdual

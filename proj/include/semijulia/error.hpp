#pragma once

#include <stdexcept>
#include <string>

namespace semijulia {

enum class ErrorKind {
  InvalidArgument,
  NonConvergence,
  Resource,
  Domain,
  Parse,
  Io,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::NonConvergence: return "non_convergence";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

/// Every failure raised by the library. `metric` carries the offending
/// numeric value when there is one (best residual, margin, point count).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, double metric = 0.0)
      : std::runtime_error(what), kind_(kind), metric_(metric) {}

  ErrorKind kind() const noexcept { return kind_; }
  double metric() const noexcept { return metric_; }

 private:
  ErrorKind kind_;
  double metric_;
};

}  // namespace semijulia

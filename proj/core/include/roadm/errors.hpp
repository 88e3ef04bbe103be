#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace roadm {

/// A ClusterConfig violates its sizing invariants. field() names the offender.
class SizingError : public std::invalid_argument {
 public:
  SizingError(std::string field, const std::string& what)
      : std::invalid_argument(what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Inputs fall outside the regime where a formula is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A request names an (endpoint, wavelength) that is already carrying a
/// connection. Raised for malformed connectivity maps, never for blocking.
class EndpointOccupiedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exact search was asked to solve an instance above its size bound.
class InstanceTooLargeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Generic precondition failure on an argument.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace roadm

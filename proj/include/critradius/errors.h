#pragma once

#include <stdexcept>

namespace critradius {

/// An argument lies outside the domain of the operation (negative radius,
/// point outside the region, k below its minimum, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A region description does not define a valid convex region.
class InvalidRegion : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input file (point CSV, region JSON).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace critradius

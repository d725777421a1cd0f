#pragma once

#include <stdexcept>
#include <string>

namespace eca {

struct InvalidConfiguration : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidRadius : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ShapeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// precondition of a rule-metadata function or constructor was violated
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnknownName : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BudgetError : std::length_error {
  using std::length_error::length_error;
};

struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct TimeConformityViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace eca

#pragma once

#include <stdexcept>

namespace garnier {

/// Division by a zero rational function or a substitution whose denominator
/// collapses to zero.
struct ZeroDivision : std::domain_error {
  using std::domain_error::domain_error;
};

/// The reduced denominator vanishes at eps = 0.
struct PoleAtZero : std::domain_error {
  using std::domain_error::domain_error;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace garnier

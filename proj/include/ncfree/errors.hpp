#pragma once

#include <stdexcept>
#include <string>

namespace ncfree {

// Bad shapes, out-of-range letters, malformed text. Maps to CLI exit code 2.
using invalid_argument = std::invalid_argument;

// A computation needs a coefficient or moment beyond the stored truncation degree.
class truncation_exceeded : public std::out_of_range {
public:
    explicit truncation_exceeded(const std::string& what) : std::out_of_range(what) {}
};

// Boxed-star inverse or S-transform requested for a series with a vanishing linear term.
class not_invertible : public std::domain_error {
public:
    explicit not_invertible(const std::string& what) : std::domain_error(what) {}
};

// A documented precondition (pi <= rho, idempotent constraint, ...) does not hold.
class precondition_violation : public std::logic_error {
public:
    explicit precondition_violation(const std::string& what) : std::logic_error(what) {}
};

} // namespace ncfree

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symres {

/// Mixing values from different coefficient rings (e.g. F_5 with F_7).
struct ring_mismatch : std::invalid_argument {
    explicit ring_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Operands built over different variable tables.
struct table_mismatch : std::invalid_argument {
    explicit table_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct unknown_variable : std::invalid_argument {
    explicit unknown_variable(const std::string& name)
        : std::invalid_argument("unknown variable: " + name) {}
};

struct unknown_block : std::invalid_argument {
    explicit unknown_block(const std::string& name)
        : std::invalid_argument("unknown block: " + name) {}
};

struct dimension_mismatch : std::invalid_argument {
    explicit dimension_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct division_by_zero : std::domain_error {
    explicit division_by_zero(const std::string& what) : std::domain_error(what) {}
};

/// Exact division was requested but the divisor does not divide evenly.
/// Distinct from division_by_zero: an inexact quotient is a meaningful
/// outcome (it certifies non-divisibility), not an invalid operand.
struct inexact_division : std::domain_error {
    explicit inexact_division(const std::string& what) : std::domain_error(what) {}
};

/// A documented size guard was exceeded (matrix dimension, symbolic
/// degree range, enumeration budget).
struct guard_exceeded : std::invalid_argument {
    explicit guard_exceeded(const std::string& what) : std::invalid_argument(what) {}
};

/// Discriminant of a specialized form whose leading coefficient is zero.
struct leading_coeff_zero : std::domain_error {
    explicit leading_coeff_zero(const std::string& what) : std::domain_error(what) {}
};

/// A polynomial that cannot be rewritten in the requested generators.
struct not_expressible : std::domain_error {
    explicit not_expressible(const std::string& what) : std::domain_error(what) {}
};

/// Text that does not conform to the polynomial grammar. `position` is a
/// 0-based character offset into the source string.
struct parse_error : std::invalid_argument {
    std::size_t position;
    parse_error(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

} // namespace symres

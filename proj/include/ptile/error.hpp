#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptile {

enum class ErrorCode {
    syntax,
    invalid_system,
    label_not_found,
    not_a_triangle,
    degenerate_hexagon,
    not_genus_one,
    basis_orientation_failure,
    rank_not_two,
    not_essential,
    admissibility_assertion,
    length_mismatch,
    zero_edge_vector,
    no_invertible_minor,
    residual_exceeded,
    singular_map,
    degenerate_lattice,
    kernel_condition_violated,
    not_admissible,
    closure_failure,
    bad_index,
    empty_range,
    bad_input,
    overflow,
};

/// Stable kebab-case name used in machine-readable error output.
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by the `.ccs` reader; positions are 1-based.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message);

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace ptile

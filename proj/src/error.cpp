#include "ptile/error.hpp"

namespace ptile {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::syntax: return "syntax";
    case ErrorCode::invalid_system: return "invalid-system";
    case ErrorCode::label_not_found: return "label-not-found";
    case ErrorCode::not_a_triangle: return "not-a-triangle";
    case ErrorCode::degenerate_hexagon: return "degenerate-hexagon";
    case ErrorCode::not_genus_one: return "not-genus-1";
    case ErrorCode::basis_orientation_failure: return "basis-orientation-failure";
    case ErrorCode::rank_not_two: return "rank-not-2";
    case ErrorCode::not_essential: return "not-essential";
    case ErrorCode::admissibility_assertion: return "admissibility-assertion-failure";
    case ErrorCode::length_mismatch: return "length-mismatch";
    case ErrorCode::zero_edge_vector: return "zero-edge-vector";
    case ErrorCode::no_invertible_minor: return "no-invertible-minor";
    case ErrorCode::residual_exceeded: return "residual-exceeded";
    case ErrorCode::singular_map: return "singular-map";
    case ErrorCode::degenerate_lattice: return "degenerate-lattice";
    case ErrorCode::kernel_condition_violated: return "kernel-condition-violated";
    case ErrorCode::not_admissible: return "not-admissible";
    case ErrorCode::closure_failure: return "closure-failure";
    case ErrorCode::bad_index: return "bad-index";
    case ErrorCode::empty_range: return "empty-range";
    case ErrorCode::bad_input: return "bad-input";
    case ErrorCode::overflow: return "overflow";
    }
    return "unknown";
}

ParseError::ParseError(int line, int column, const std::string& message)
    : Error(ErrorCode::syntax,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace ptile

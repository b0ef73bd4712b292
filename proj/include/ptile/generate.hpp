#pragma once

// Random curve systems for property tests and demos.

#include <cstddef>
#include <random>

#include "ptile/ccs.hpp"

namespace ptile {

using Rng = std::mt19937_64;

/// Uniformly shuffled valid system with labels 1..`labels`. Every curve gets
/// at least one entry and +k, -k always land on different curves.
/// Requires curves >= 2 and 2 * labels >= curves.
CurveSystem random_valid_system(std::size_t curves, std::size_t labels, Rng& rng);

struct EssentialOptions {
    std::size_t curves = 3;
    /// Upper bound on the number of labels; candidates above it are rejected.
    std::size_t max_labels = 20;
    /// Geodesic directions (p, q) are drawn with |p|, |q| <= max_slope.
    int max_slope = 2;
    /// Random hexagon flips applied to each candidate before the final check.
    int flips = 3;
    std::size_t max_attempts = 20000;
};

/// Essential system obtained from a random arrangement of closed geodesics on
/// the flat square torus, optionally scrambled by hexagon flips, and filtered
/// through the essentiality predicate. Throws Error(bad_input) once the
/// attempt cap is exhausted.
CurveSystem random_essential_system(const EssentialOptions& options, Rng& rng);

}  // namespace ptile

#pragma once

#include "ptile/ccs.hpp"
#include "ptile/homology.hpp"

namespace ptile::testing {

// Four curves on a torus, labelled 1..5.
inline CurveSystem curve_ex() { return {{1, 2, 3}, {-1, -4}, {-2, -5}, {-3, 4, 5}}; }

// One face with 20 borders; genus 3.
inline CurveSystem genus3() { return {{1, 4, 3}, {-1, -2}, {-4, -5}, {2, -3, 5}}; }

// Six parallelograms; intersection matrix below.
inline CurveSystem proof1() { return {{1, 2, 3, 4}, {-1, 5}, {-3, 6}, {-2, -5, -4, -6}}; }

inline CurveSystem trivial() { return {{1}, {-1}}; }

// Three rhombi around a hexagon.
inline CurveSystem hexagon() { return {{1, 2}, {-1, 3}, {-2, -3}}; }

inline IntersectionMatrix genus3_matrix() {
    return {{0, 1, 1, 1}, {-1, 0, 0, -1}, {-1, 0, 0, -1}, {-1, 1, 1, 0}};
}

inline IntersectionMatrix proof2_matrix() {
    return {{0, 1, 1, 2}, {-1, 0, 0, 1}, {-1, 0, 0, 1}, {-2, -1, -1, 0}};
}

inline IntersectionMatrix square_matrix() { return {{0, 1}, {-1, 0}}; }

}  // namespace ptile::testing

#pragma once

// Edge data e (one plane vector per curve) and what the structure theorem
// asks of it: admissibility, zone vectors z = C e, the period lattice, the
// area form, canonical edge data, the GL(2,R) action, and the boundary strata
// of the admissible cone.

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ptile/generate.hpp"
#include "ptile/homology.hpp"

namespace ptile {

using EdgeData = ComplexVector;
using ZoneVectors = ComplexVector;

/// det_R(u, v) = Im(conj(u) v), the oriented area of the pair.
inline double det_r(Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); }

struct AdmissibilityReport {
    bool admissible = false;
    /// Pairs i < j with c_ij != 0 and c_ij det(e_i, e_j) <= 0.
    std::vector<std::pair<std::size_t, std::size_t>> violations;
    /// min over constrained pairs of c_ij det(e_i, e_j); +inf without constraints.
    double margin = std::numeric_limits<double>::infinity();
};

AdmissibilityReport admissible(const IntersectionMatrix& c, const EdgeData& e);

ZoneVectors zone_vectors(const IntersectionMatrix& c, const EdgeData& e);

struct LatticeBasis {
    Complex a;
    Complex b;
    /// sign of det_R(a, b)
    int orientation() const { return det_r(a, b) > 0 ? 1 : (det_r(a, b) < 0 ? -1 : 0); }
};

/// Solves a A + b B = C e from the best-conditioned 2x2 minor of (A | B) and
/// certifies the full system to 1e-9 * ||C e||.
LatticeBasis lattice_basis(const HomologyCoordinates& hc, const IntersectionMatrix& c, const EdgeData& e);

/// 1/2 Im(e^* C e).
double area(const IntersectionMatrix& c, const EdgeData& e);

/// Unit-norm eigenvector of C for +i lambda; asserted admissible.
EdgeData canonical_edge_data(const CurveSystem& system);

/// (x, y) -> (m00 x + m01 y, m10 x + m11 y) on x + iy.
struct RealLinearMap {
    double m00 = 1.0, m01 = 0.0, m10 = 0.0, m11 = 1.0;

    double det() const { return m00 * m11 - m01 * m10; }
    Complex operator()(Complex z) const {
        return {m00 * z.real() + m01 * z.imag(), m10 * z.real() + m11 * z.imag()};
    }
    static RealLinearMap rotation(double theta);
};

EdgeData apply_real_linear(const RealLinearMap& m, const EdgeData& e);

/// The real-linear image of e whose lattice basis is (1, i). A negatively
/// oriented basis is repaired by swapping (a, b) and (A, B) first.
EdgeData normalize_to_standard_lattice(const HomologyCoordinates& hc, const IntersectionMatrix& c,
                                       const EdgeData& e);

struct DeformationSample {
    double t;
    AdmissibilityReport report;
};

/// Samples (1 - t) e_start + t e_end at t = 0, 1/steps, ..., 1. The endpoints
/// must have the same zone vectors.
std::vector<DeformationSample> deformation_path(const IntersectionMatrix& c, const EdgeData& e_start,
                                                const EdgeData& e_end, int steps);

struct BoundaryHit {
    std::size_t r;
    std::size_t s;
    /// every other constrained pair is strictly admissible and off its wall
    bool in_stratum;
};

/// Constrained pairs r < s with |det(e_r, e_s)| <= tol.
std::vector<BoundaryHit> classify_boundary(const IntersectionMatrix& c, const EdgeData& e, double tol = 1e-12);

/// Radius rho such that every e' with ||e' - e|| < rho is admissible; 0 when e
/// is not admissible. With mu = margin / max|c_ij| and E = max|e_i| the
/// quadratic bound 2 E rho + rho^2 < mu gives rho = mu / (E + sqrt(E^2 + mu)).
double openness_radius(const IntersectionMatrix& c, const EdgeData& e);

/// Orthonormal basis of the real kernel of C on C^m, as 2m - 4 complex
/// vectors (each real kernel vector and its multiple by i).
std::vector<EdgeData> kernel_basis(const IntersectionMatrix& c);

/// Random admissible point of the slice {e' : C e' = C e}, drawn with uniform
/// coefficients on kernel_basis and pulled back toward e until admissible.
EdgeData sample_kernel_slice(const IntersectionMatrix& c, const EdgeData& e, Rng& rng);

/// Euclidean norm on C^m.
double norm(const EdgeData& e);

/// Edge-data files are JSON arrays of [re, im] pairs in curve order.
EdgeData parse_edge_data(const std::string& text);
EdgeData read_edge_data_file(const std::string& path);
std::string format_edge_data(const EdgeData& e);

}  // namespace ptile

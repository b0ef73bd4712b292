#pragma once

// Development of an essential genus-1 system with admissible edge data into a
// fundamental domain of parallelograms, closure and cone-angle checks,
// periodic replication, zone-curve overlays and SVG / JSON export.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ptile/geometry.hpp"

namespace ptile {

/// The parallelogram dual to crossing `label`. curve_i carries +label and
/// curve_j carries -label, so det(e_i, e_j) > 0 on admissible data and the
/// corners center -+ e_i/2 -+ e_j/2 below run counter-clockwise.
struct PlacedParallelogram {
    int label = 0;
    std::size_t curve_i = 0;
    std::size_t curve_j = 0;
    Complex center;
    std::array<Complex, 4> corners;

    double signed_area() const;
};

struct FundamentalDomain {
    CurveSystem system;
    EdgeData edges;
    /// One per label, in increasing label order.
    std::vector<PlacedParallelogram> parallelograms;
    LatticeBasis lattice;
    /// Cone angle at each tiling vertex, indexed like build_faces(system).
    std::vector<double> vertex_angles;
    double total_area = 0.0;

    /// Index into `parallelograms` of an original label, or throws bad_index.
    std::size_t index_of(int label) const;
};

/// Breadth-first placement from the first crossing on curve 1, centered at the
/// origin. Throws not-essential, not-admissible or closure-failure.
FundamentalDomain develop(const CurveSystem& system, const EdgeData& e);

struct ClosureReport {
    /// | displacement around curve i - (C e)_i |
    std::vector<double> curve_residuals;
    /// largest distance, modulo the lattice, between corners meeting at a vertex
    std::vector<double> face_residuals;
    /// | cone angle - 2 pi | per vertex
    std::vector<double> angle_residuals;
    /// | sum (2 pi - phi_v) |
    double gauss_bonnet = 0.0;
    double max_residual() const;
};

ClosureReport verify_closure(const FundamentalDomain& fd, const IntersectionMatrix& c, const EdgeData& e);

/// Midpoints of the edges curve i crosses, unrolled in the plane; last minus
/// first equals (C e)_i.
std::vector<Complex> zone_polyline(const FundamentalDomain& fd, std::size_t curve);

/// Half-open integer range [begin, end).
struct IndexRange {
    int begin = 0;
    int end = 1;
    int size() const { return end - begin; }
};

struct TilingPatch {
    FundamentalDomain domain;
    /// (p, q) of each copy; the copy is translated by p a + q b.
    std::vector<std::array<int, 2>> copies;
    /// Zone polylines of every curve in every copy, filled when requested.
    std::vector<std::vector<Complex>> zone_polylines;

    Complex translation(std::size_t copy) const;
};

TilingPatch replicate(const FundamentalDomain& fd, IndexRange p, IndexRange q, bool overlay = false);

/// Flat view of a patch, also what import_json returns.
struct PatchCell {
    int label = 0;
    Complex center;
    std::array<Complex, 4> corners;
};

struct PatchData {
    LatticeBasis lattice;
    std::vector<PatchCell> cells;
    std::vector<std::vector<Complex>> zones;
};

PatchData flatten(const TilingPatch& patch);

struct SvgOptions {
    /// pixels per unit length
    double scale = 100.0;
    double margin = 10.0;
    bool overlay = true;
};

std::string export_svg(const TilingPatch& patch, const SvgOptions& options = {});
std::string export_json(const TilingPatch& patch);
std::string export_json(const PatchData& data);
PatchData import_json(const std::string& text);

/// Deterministic fill color for a label.
std::string label_color(int label);

}  // namespace ptile

#pragma once

// Combinatorial curve systems: cyclic vectors of signed intersection labels,
// the border/successor calculus that rebuilds the faces of the underlying
// surface, and the hexagon flip that permutes a system without changing its
// intersection matrix.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ptile {

/// One oriented curve: the cyclic sequence of signed labels it meets.
/// Equality is equality up to cyclic rotation.
class Curve {
public:
    Curve() = default;
    explicit Curve(std::vector<int> entries) : entries_(std::move(entries)) {}
    Curve(std::initializer_list<int> entries) : entries_(entries) {}

    const std::vector<int>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    int operator[](std::size_t i) const { return entries_[i]; }

    /// Lexicographically minimal rotation.
    Curve canonical() const;

    friend bool operator==(const Curve& lhs, const Curve& rhs);

private:
    std::vector<int> entries_;
};

struct CurveHash {
    std::size_t operator()(const Curve& curve) const noexcept;
};

struct CurveSystem {
    std::vector<Curve> curves;

    CurveSystem() = default;
    explicit CurveSystem(std::vector<Curve> cs) : curves(std::move(cs)) {}
    CurveSystem(std::initializer_list<Curve> cs) : curves(cs) {}

    std::size_t curve_count() const noexcept { return curves.size(); }
    /// Sorted distinct absolute values of all entries.
    std::vector<int> labels() const;
    std::size_t entry_count() const noexcept;

    /// Curve-by-curve cyclic equality, curve order significant.
    friend bool operator==(const CurveSystem& lhs, const CurveSystem& rhs);
};

enum class ViolationKind {
    too_few_curves,
    empty_curve,
    zero_label,
    missing_entry,
    duplicate_entry,
    opposite_signs_same_curve,
};

struct Violation {
    ViolationKind kind;
    int label = 0;          // signed entry the violation is about, 0 if none
    std::size_t curve = 0;  // curve index the violation is about
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate(const CurveSystem& system);

/// Reads the `.ccs` text format and validates the result. Throws ParseError
/// on malformed text and Error(invalid_system) when validation fails.
CurveSystem parse_curve_system(std::string_view text);
CurveSystem read_curve_system_file(const std::string& path);
/// Syntax-only read; the result may violate the curve system conditions.
CurveSystem parse_curves(std::string_view text);
std::string read_text_file(const std::string& path);

/// Canonical `.ccs` text: one line per curve in input order, each curve
/// written from its minimal rotation.
std::string serialize(const CurveSystem& system);

/// Left border [start, end] or right border -[start, end] of the oriented
/// edge from `start` to its cyclic successor `end`.
struct Border {
    bool negated = false;
    int start = 0;
    int end = 0;

    friend bool operator==(const Border&, const Border&) = default;
    friend auto operator<=>(const Border& lhs, const Border& rhs) {
        if (auto c = lhs.start <=> rhs.start; c != 0) return c;
        if (auto c = lhs.end <=> rhs.end; c != 0) return c;
        return lhs.negated <=> rhs.negated;
    }
};

std::string to_string(const Border& border);

struct FaceLoop {
    std::vector<Border> borders;

    std::size_t size() const noexcept { return borders.size(); }
    friend bool operator==(const FaceLoop&, const FaceLoop&) = default;
};

/// All 4n borders, left and right, in curve order.
std::vector<Border> all_borders(const CurveSystem& system);

/// Turn left at the far vertex of `border`. Throws Error(label_not_found) if
/// the border is not one of the system's borders.
Border successor(const Border& border, const CurveSystem& system);
Border predecessor(const Border& border, const CurveSystem& system);

/// Orbits of the successor map. Each loop starts at its minimal border and
/// loops are sorted by that border.
std::vector<FaceLoop> build_faces(const CurveSystem& system);

struct SurfaceReport {
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::vector<FaceLoop> faces;
    std::vector<int> component_of_curve;
    std::vector<int> face_component;
    // Per component, indexed by component id.
    std::vector<int> component_vertices;
    std::vector<int> component_edges;
    std::vector<int> component_faces;
    std::vector<int> genus;
    bool connected = false;

    int component_count() const noexcept { return static_cast<int>(genus.size()); }
    int euler_characteristic() const noexcept;
};

SurfaceReport surface_report(const CurveSystem& system);

/// Faces bounded by exactly three borders.
std::vector<FaceLoop> find_rototiler_moves(const CurveSystem& system);

/// Flips the hexagon of three parallelograms around a triangular face: on
/// each of the three curves the two labels bounding the triangle swap places.
CurveSystem apply_rototiler(const CurveSystem& system, const FaceLoop& face);

std::ostream& operator<<(std::ostream& os, const Curve& curve);
std::ostream& operator<<(std::ostream& os, const Border& border);

}  // namespace ptile

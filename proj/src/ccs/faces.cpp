#include <algorithm>
#include <numeric>
#include <ostream>

#include "ptile/ccs.hpp"
#include "ptile/error.hpp"
#include "ptile/system_index.hpp"

namespace ptile {

namespace {

std::size_t require_border(const SystemIndex& index, const Border& border) {
    const long id = index.find_border(border);
    if (id < 0) throw Error(ErrorCode::label_not_found, "border " + to_string(border) + " is not a border of the system");
    return static_cast<std::size_t>(id);
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

std::string to_string(const Border& border) {
    std::string s = border.negated ? "-[" : "[";
    s += std::to_string(border.start) + "," + std::to_string(border.end) + "]";
    return s;
}

std::ostream& operator<<(std::ostream& os, const Border& border) { return os << to_string(border); }

std::vector<Border> all_borders(const CurveSystem& system) {
    const SystemIndex index(system);
    std::vector<Border> out;
    out.reserve(index.border_count());
    for (std::size_t b = 0; b < index.border_count(); ++b) out.push_back(index.to_border(b));
    return out;
}

Border successor(const Border& border, const CurveSystem& system) {
    const SystemIndex index(system);
    return index.to_border(index.successor(require_border(index, border)));
}

Border predecessor(const Border& border, const CurveSystem& system) {
    const SystemIndex index(system);
    return index.to_border(index.predecessor(require_border(index, border)));
}

std::vector<FaceLoop> build_faces(const CurveSystem& system) {
    const SystemIndex index(system);
    std::vector<FaceLoop> faces;
    for (const auto& orbit : index.face_orbits()) {
        FaceLoop face;
        face.borders.reserve(orbit.size());
        for (std::size_t b : orbit) face.borders.push_back(index.to_border(b));
        faces.push_back(std::move(face));
    }
    return faces;
}

int SurfaceReport::euler_characteristic() const noexcept {
    return static_cast<int>(vertex_count) - static_cast<int>(edge_count) + static_cast<int>(faces.size());
}

SurfaceReport surface_report(const CurveSystem& system) {
    const SystemIndex index(system);
    SurfaceReport report;
    report.vertex_count = index.label_count();
    report.edge_count = index.slot_count();

    UnionFind uf(index.curve_count());
    for (std::size_t k = 0; k < index.label_count(); ++k) uf.unite(index.plus_curve(k), index.minus_curve(k));

    std::vector<int> root_to_component(index.curve_count(), -1);
    int components = 0;
    report.component_of_curve.resize(index.curve_count());
    for (std::size_t c = 0; c < index.curve_count(); ++c) {
        const std::size_t r = uf.find(c);
        if (root_to_component[r] < 0) root_to_component[r] = components++;
        report.component_of_curve[c] = root_to_component[r];
    }

    report.component_vertices.assign(components, 0);
    report.component_edges.assign(components, 0);
    report.component_faces.assign(components, 0);
    for (std::size_t k = 0; k < index.label_count(); ++k)
        ++report.component_vertices[report.component_of_curve[index.plus_curve(k)]];
    for (std::size_t s = 0; s < index.slot_count(); ++s)
        ++report.component_edges[report.component_of_curve[index.slot_curve(s)]];

    for (const auto& orbit : index.face_orbits()) {
        FaceLoop face;
        for (std::size_t b : orbit) face.borders.push_back(index.to_border(b));
        const int comp = report.component_of_curve[index.slot_curve(SystemIndex::border_slot(orbit.front()))];
        ++report.component_faces[comp];
        report.face_component.push_back(comp);
        report.faces.push_back(std::move(face));
    }

    report.genus.resize(components);
    for (int c = 0; c < components; ++c) {
        const int chi = report.component_vertices[c] - report.component_edges[c] + report.component_faces[c];
        report.genus[c] = (2 - chi) / 2;
    }
    report.connected = components == 1;
    return report;
}

std::vector<FaceLoop> find_rototiler_moves(const CurveSystem& system) {
    std::vector<FaceLoop> out;
    for (auto& face : build_faces(system))
        if (face.size() == 3) out.push_back(std::move(face));
    return out;
}

}  // namespace ptile

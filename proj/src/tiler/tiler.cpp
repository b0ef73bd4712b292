#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

#include "ptile/error.hpp"
#include "ptile/system_index.hpp"
#include "ptile/tiler.hpp"

namespace ptile {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// sigma_i(k) e_j(k): the signed edge vector of the other curve at `slot`.
Complex step_half(const SystemIndex& idx, const EdgeData& e, std::size_t slot) {
    return static_cast<double>(idx.slot_sign(slot)) * e[idx.other_curve(slot)] * 0.5;
}

// Center displacement from the crossing at `slot` to the next one on its curve.
Complex displacement(const SystemIndex& idx, const EdgeData& e, std::size_t slot) {
    return step_half(idx, e, slot) + step_half(idx, e, idx.next_slot(slot));
}

// Distance from w to the nearest point of the lattice.
double lattice_distance(Complex w, const LatticeBasis& lb) {
    const double d = det_r(lb.a, lb.b);
    const double p = det_r(w, lb.b) / d;
    const double q = det_r(lb.a, w) / d;
    return std::abs(w - std::round(p) * lb.a - std::round(q) * lb.b);
}

Complex corner(const SystemIndex& idx, const EdgeData& e, const std::vector<Complex>& centers, std::size_t border) {
    const std::size_t k = idx.turn_label(border);
    const CornerSigns cs = idx.turn_corner(border);
    return centers[k] + 0.5 * (static_cast<double>(cs.plus) * e[idx.plus_curve(k)] + static_cast<double>(cs.minus) * e[idx.minus_curve(k)]);
}

double corner_angle(const SystemIndex& idx, const EdgeData& e, std::size_t border) {
    const std::size_t k = idx.turn_label(border);
    const CornerSigns cs = idx.turn_corner(border);
    const Complex u = -static_cast<double>(cs.plus) * e[idx.plus_curve(k)];
    const Complex v = -static_cast<double>(cs.minus) * e[idx.minus_curve(k)];
    return std::atan2(std::abs(det_r(u, v)), u.real() * v.real() + u.imag() * v.imag());
}

double scale_of(const EdgeData& e) {
    double s = 0.0;
    for (const Complex& z : e) s += std::abs(z);
    return std::max(s, 1.0);
}

}  // namespace

double PlacedParallelogram::signed_area() const { return det_r(corners[1] - corners[0], corners[3] - corners[0]); }

std::size_t FundamentalDomain::index_of(int label) const {
    for (std::size_t i = 0; i < parallelograms.size(); ++i)
        if (parallelograms[i].label == label) return i;
    throw Error(ErrorCode::bad_index, "no parallelogram for label " + std::to_string(label));
}

FundamentalDomain develop(const CurveSystem& system, const EdgeData& e) {
    const EssentialityReport ess = essentiality(system);
    if (!ess.essential)
        throw Error(ErrorCode::not_essential, "curve system is not essential: " + to_string(ess.reasons.front()));
    const IntersectionMatrix c = intersection_matrix(system);
    if (!admissible(c, e).admissible) throw Error(ErrorCode::not_admissible, "edge data is not admissible");

    const SystemIndex idx(system);
    const std::size_t n = idx.label_count();

    FundamentalDomain fd;
    fd.system = system;
    fd.edges = e;
    fd.lattice = lattice_basis(homology_coordinates(system), c, e);

    std::vector<Complex> centers(n);
    std::vector<char> placed(n, 0);
    std::vector<char> tree_edge(idx.slot_count(), 0);
    const std::size_t root = idx.slot_label(idx.curve_begin(0));
    placed[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
        const std::size_t k = queue.front();
        queue.pop_front();
        for (std::size_t s : {idx.plus_slot(k), idx.minus_slot(k)}) {
            const std::size_t fwd = idx.slot_label(idx.next_slot(s));
            if (!placed[fwd]) {
                centers[fwd] = centers[k] + displacement(idx, e, s);
                placed[fwd] = 1;
                tree_edge[s] = 1;
                queue.push_back(fwd);
            }
            const std::size_t p = idx.prev_slot(s);
            const std::size_t back = idx.slot_label(p);
            if (!placed[back]) {
                centers[back] = centers[k] - displacement(idx, e, p);
                placed[back] = 1;
                tree_edge[p] = 1;
                queue.push_back(back);
            }
        }
    }

    const double tol = 1e-9 * scale_of(e);
    for (std::size_t s = 0; s < idx.slot_count(); ++s) {
        if (tree_edge[s]) continue;
        const Complex w = centers[idx.slot_label(idx.next_slot(s))] - centers[idx.slot_label(s)] - displacement(idx, e, s);
        const double miss = lattice_distance(w, fd.lattice);
        if (!(miss <= tol))
            throw Error(ErrorCode::closure_failure, "gluing along " + std::to_string(idx.slot_value(s)) +
                                                        " misses the lattice by " + std::to_string(miss));
    }

    for (std::size_t k = 0; k < n; ++k) {
        PlacedParallelogram pg;
        pg.label = idx.original_label(k);
        pg.curve_i = idx.plus_curve(k);
        pg.curve_j = idx.minus_curve(k);
        pg.center = centers[k];
        const Complex hi = 0.5 * e[pg.curve_i], hj = 0.5 * e[pg.curve_j];
        pg.corners = {pg.center - hi - hj, pg.center + hi - hj, pg.center + hi + hj, pg.center - hi + hj};
        fd.total_area += std::abs(det_r(e[pg.curve_i], e[pg.curve_j]));
        fd.parallelograms.push_back(pg);
    }

    for (const auto& orbit : idx.face_orbits()) {
        double phi = 0.0;
        for (std::size_t b : orbit) phi += corner_angle(idx, e, b);
        fd.vertex_angles.push_back(phi);
    }
    return fd;
}

double ClosureReport::max_residual() const {
    double m = gauss_bonnet;
    for (const auto* v : {&curve_residuals, &face_residuals, &angle_residuals})
        for (double r : *v) m = std::max(m, r);
    return m;
}

ClosureReport verify_closure(const FundamentalDomain& fd, const IntersectionMatrix& c, const EdgeData& e) {
    const SystemIndex idx(fd.system);
    if (e.size() != idx.curve_count() || c.size() != idx.curve_count())
        throw Error(ErrorCode::length_mismatch, "edge data or matrix does not match the domain");
    const ZoneVectors z = c.apply(e);

    ClosureReport rep;
    for (std::size_t i = 0; i < idx.curve_count(); ++i) {
        Complex walk = 0.0;
        for (std::size_t s = idx.curve_begin(i); s < idx.curve_end(i); ++s) walk += displacement(idx, e, s);
        rep.curve_residuals.push_back(std::abs(walk - z[i]));
    }

    std::vector<Complex> centers(idx.label_count());
    for (std::size_t k = 0; k < centers.size(); ++k) centers[k] = fd.parallelograms[k].center;
    for (const auto& orbit : idx.face_orbits()) {
        const Complex first = corner(idx, e, centers, orbit.front());
        double worst = 0.0;
        for (std::size_t b : orbit) worst = std::max(worst, lattice_distance(corner(idx, e, centers, b) - first, fd.lattice));
        rep.face_residuals.push_back(worst);
    }

    double defect = 0.0;
    for (double phi : fd.vertex_angles) {
        rep.angle_residuals.push_back(std::abs(phi - two_pi));
        defect += two_pi - phi;
    }
    rep.gauss_bonnet = std::abs(defect);
    return rep;
}

std::vector<Complex> zone_polyline(const FundamentalDomain& fd, std::size_t curve) {
    const SystemIndex idx(fd.system);
    if (curve >= idx.curve_count())
        throw Error(ErrorCode::bad_index, "curve index " + std::to_string(curve + 1) + " out of range");
    const std::size_t first = idx.curve_begin(curve);
    Complex c = fd.parallelograms[idx.slot_label(first)].center;
    std::vector<Complex> out{c - step_half(idx, fd.edges, first)};
    for (std::size_t s = first; s < idx.curve_end(curve); ++s) {
        out.push_back(c + step_half(idx, fd.edges, s));
        c += displacement(idx, fd.edges, s);
    }
    return out;
}

Complex TilingPatch::translation(std::size_t copy) const {
    return static_cast<double>(copies[copy][0]) * domain.lattice.a + static_cast<double>(copies[copy][1]) * domain.lattice.b;
}

TilingPatch replicate(const FundamentalDomain& fd, IndexRange p, IndexRange q, bool overlay) {
    if (p.size() <= 0 || q.size() <= 0) throw Error(ErrorCode::empty_range, "replication range is empty");
    TilingPatch patch;
    patch.domain = fd;
    for (int i = p.begin; i < p.end; ++i)
        for (int j = q.begin; j < q.end; ++j) patch.copies.push_back({i, j});
    if (overlay) {
        std::vector<std::vector<Complex>> base;
        for (std::size_t i = 0; i < fd.system.curve_count(); ++i) base.push_back(zone_polyline(fd, i));
        for (std::size_t k = 0; k < patch.copies.size(); ++k)
            for (auto line : base) {
                for (Complex& z : line) z += patch.translation(k);
                patch.zone_polylines.push_back(std::move(line));
            }
    }
    return patch;
}

PatchData flatten(const TilingPatch& patch) {
    PatchData data;
    data.lattice = patch.domain.lattice;
    for (std::size_t k = 0; k < patch.copies.size(); ++k) {
        const Complex t = patch.translation(k);
        for (const auto& pg : patch.domain.parallelograms) {
            PatchCell cell{pg.label, pg.center + t, pg.corners};
            for (Complex& z : cell.corners) z += t;
            data.cells.push_back(cell);
        }
    }
    data.zones = patch.zone_polylines;
    return data;
}

}  // namespace ptile

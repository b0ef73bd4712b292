#pragma once

// Test-only reference implementations. Nothing here calls into the library
// code paths it is used to check.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <vector>

#include "ptile/ccs.hpp"

namespace ptile::testing {

/// Faces of the combinatorial map of a curve system, traced with darts and a
/// rotation system. At a crossing whose +k entry lies on curve P and -k entry
/// on curve Q, the counter-clockwise rotation is
///   out(P), out(Q), in(P), in(Q).
/// A face is the orbit of d -> rot^{-1}(opposite(d)). A forward dart of the edge
/// [x, x+] keeps its face on the left and reads as the left border; the
/// backward dart reads as the right border.
inline std::vector<FaceLoop> rotation_system_faces(const CurveSystem& system) {
    struct Slot {
        std::size_t curve, pos;
    };
    std::vector<Slot> slots;
    std::map<int, std::size_t> slot_of_value;
    std::vector<std::size_t> offset{0};
    for (std::size_t c = 0; c < system.curves.size(); ++c) {
        for (std::size_t p = 0; p < system.curves[c].size(); ++p) {
            slot_of_value[system.curves[c][p]] = slots.size();
            slots.push_back({c, p});
        }
        offset.push_back(slots.size());
    }
    auto value = [&](std::size_t s) { return system.curves[slots[s].curve][slots[s].pos]; };
    auto next = [&](std::size_t s) {
        const auto& sl = slots[s];
        return offset[sl.curve] + (sl.pos + 1) % system.curves[sl.curve].size();
    };
    auto prev = [&](std::size_t s) {
        const auto& sl = slots[s];
        const std::size_t m = system.curves[sl.curve].size();
        return offset[sl.curve] + (sl.pos + m - 1) % m;
    };

    // Dart 2s leaves the vertex of slot s along edge s; dart 2s+1 arrives back
    // at the vertex of next(s) along the same edge, pointing backwards.
    auto out_dart = [&](std::size_t s) { return 2 * s; };
    auto in_dart = [&](std::size_t s) { return 2 * prev(s) + 1; };
    auto vertex_of = [&](std::size_t dart) {
        const std::size_t s = dart / 2;
        const int v = (dart % 2 == 0) ? value(s) : value(next(s));
        return v < 0 ? -v : v;
    };
    auto rotation_at = [&](int label) {
        const std::size_t p = slot_of_value.at(label), q = slot_of_value.at(-label);
        return std::array<std::size_t, 4>{out_dart(p), out_dart(q), in_dart(p), in_dart(q)};
    };
    auto rot_inverse = [&](std::size_t dart) {
        const auto r = rotation_at(vertex_of(dart));
        for (std::size_t t = 0; t < 4; ++t)
            if (r[t] == dart) return r[(t + 3) % 4];
        return dart;
    };
    auto opposite = [](std::size_t dart) { return dart ^ 1U; };
    auto to_border = [&](std::size_t dart) {
        const std::size_t s = dart / 2;
        return Border{dart % 2 == 1, value(s), value(next(s))};
    };

    const std::size_t darts = 2 * slots.size();
    std::vector<char> seen(darts, 0);
    std::vector<FaceLoop> faces;
    for (std::size_t d = 0; d < darts; ++d) {
        if (seen[d]) continue;
        FaceLoop face;
        std::size_t cur = d;
        while (!seen[cur]) {
            seen[cur] = 1;
            face.borders.push_back(to_border(cur));
            cur = rot_inverse(opposite(cur));
        }
        auto it = std::min_element(face.borders.begin(), face.borders.end());
        std::rotate(face.borders.begin(), it, face.borders.end());
        faces.push_back(std::move(face));
    }
    std::sort(faces.begin(), faces.end(),
              [](const FaceLoop& a, const FaceLoop& b) { return a.borders.front() < b.borders.front(); });
    return faces;
}

/// Collinearity residual || u - proj_v(u) || / || u || for complex vectors.
inline double collinearity_residual(const std::vector<std::complex<double>>& u,
                                    const std::vector<std::complex<double>>& v) {
    std::complex<double> vu = 0.0;
    double vv = 0.0, uu = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        vu += std::conj(v[i]) * u[i];
        vv += std::norm(v[i]);
        uu += std::norm(u[i]);
    }
    const std::complex<double> mu = vu / vv;
    double r = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) r += std::norm(u[i] - mu * v[i]);
    return std::sqrt(r / uu);
}

/// Overlap depth of two convex polygons along their best separating axis
/// (edge normals of either polygon). Positive means the interiors intersect;
/// <= 0 means some axis separates them.
template <class Poly>
double convex_overlap(const Poly& p, const Poly& q) {
    double best = std::numeric_limits<double>::infinity();
    auto axes_of = [&](const Poly& poly) {
        for (std::size_t t = 0; t < poly.size(); ++t) {
            const std::complex<double> edge = poly[(t + 1) % poly.size()] - poly[t];
            const std::complex<double> axis = std::complex<double>(-edge.imag(), edge.real()) / std::abs(edge);
            double lo_p = std::numeric_limits<double>::infinity(), hi_p = -lo_p, lo_q = lo_p, hi_q = -lo_p;
            for (const auto& z : p) {
                const double d = z.real() * axis.real() + z.imag() * axis.imag();
                lo_p = std::min(lo_p, d);
                hi_p = std::max(hi_p, d);
            }
            for (const auto& z : q) {
                const double d = z.real() * axis.real() + z.imag() * axis.imag();
                lo_q = std::min(lo_q, d);
                hi_q = std::max(hi_q, d);
            }
            best = std::min(best, std::min(hi_p, hi_q) - std::max(lo_p, lo_q));
        }
    };
    axes_of(p);
    axes_of(q);
    return best;
}

}  // namespace ptile::testing

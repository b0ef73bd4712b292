#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "ptile/error.hpp"
#include "ptile/generate.hpp"
#include "ptile/homology.hpp"

namespace ptile {

CurveSystem random_valid_system(std::size_t curves, std::size_t labels, Rng& rng) {
    if (curves < 2 || 2 * labels < curves)
        throw Error(ErrorCode::bad_input, "need at least 2 curves and 2 * labels >= curves");

    std::vector<int> entries;
    for (int k = 1; k <= static_cast<int>(labels); ++k) {
        entries.push_back(k);
        entries.push_back(-k);
    }
    std::shuffle(entries.begin(), entries.end(), rng);

    // The first `curves` entries seed one curve each, so no curve is empty.
    std::vector<std::vector<int>> out(curves);
    std::vector<long> curve_of(2 * labels + 1, -1);
    auto slot = [&](int v) { return static_cast<std::size_t>(v + static_cast<int>(labels)); };
    for (std::size_t t = 0; t < entries.size(); ++t) {
        const int v = entries[t];
        std::size_t c;
        if (t < curves) {
            c = t;
        } else {
            const long partner = curve_of[slot(-v)];
            std::uniform_int_distribution<std::size_t> pick(0, partner < 0 ? curves - 1 : curves - 2);
            c = pick(rng);
            if (partner >= 0 && c >= static_cast<std::size_t>(partner)) ++c;
        }
        curve_of[slot(v)] = static_cast<long>(c);
        out[c].push_back(v);
    }
    CurveSystem system;
    for (auto& c : out) {
        std::shuffle(c.begin(), c.end(), rng);
        system.curves.emplace_back(std::move(c));
    }
    return system;
}

namespace {

struct Geodesic {
    std::array<int, 2> dir;
    std::array<double, 2> offset;
};

struct Crossing {
    double t;  // parameter on curve i
    double u;  // parameter on curve j
};

double frac(double x) { return x - std::floor(x); }

// All intersection points of two closed geodesics of non-parallel direction.
std::vector<Crossing> crossings(const Geodesic& g, const Geodesic& h) {
    // Solve o_g + t v_g = o_h + u v_h (mod Z^2) for t, u in [0, 1).
    const double det = static_cast<double>(g.dir[0]) * -h.dir[1] - static_cast<double>(-h.dir[0]) * g.dir[1];
    const int reach = 2 * (std::abs(g.dir[0]) + std::abs(g.dir[1]) + std::abs(h.dir[0]) + std::abs(h.dir[1])) + 2;
    std::vector<Crossing> out;
    for (int n0 = -reach; n0 <= reach; ++n0)
        for (int n1 = -reach; n1 <= reach; ++n1) {
            const double w0 = h.offset[0] - g.offset[0] + n0;
            const double w1 = h.offset[1] - g.offset[1] + n1;
            const double t = (w0 * -h.dir[1] - -h.dir[0] * w1) / det;
            const double u = (g.dir[0] * w1 - g.dir[1] * w0) / det;
            if (t >= 0.0 && t < 1.0 && u >= 0.0 && u < 1.0) out.push_back({t, u});
        }
    return out;
}

bool near_mod1(double a, double b, double tol) {
    const double d = frac(a - b);
    return d < tol || d > 1.0 - tol;
}

std::vector<std::array<int, 2>> primitive_directions(int max_slope) {
    std::vector<std::array<int, 2>> dirs;
    for (int p = 0; p <= max_slope; ++p)
        for (int q = -max_slope; q <= max_slope; ++q) {
            if (p == 0 && q <= 0) continue;
            if (std::gcd(p, q) == 1) dirs.push_back({p, q});
        }
    return dirs;
}

// Returns an empty system when the arrangement is rejected.
CurveSystem geodesic_system(const std::vector<Geodesic>& gs, std::size_t max_labels, Rng& rng) {
    const double tol = 1e-9;
    const std::size_t m = gs.size();
    struct Hit {
        double t;
        std::size_t label;
        int sign;
    };
    std::vector<std::vector<Hit>> hits(m);
    std::size_t label = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const long det = static_cast<long>(gs[i].dir[0]) * gs[j].dir[1] - static_cast<long>(gs[i].dir[1]) * gs[j].dir[0];
            if (det == 0) continue;
            const auto xs = crossings(gs[i], gs[j]);
            if (xs.size() != static_cast<std::size_t>(std::abs(det))) return {};
            const int si = det > 0 ? 1 : -1;
            for (const auto& x : xs) {
                hits[i].push_back({x.t, label, si});
                hits[j].push_back({x.u, label, -si});
                ++label;
            }
            if (label > max_labels) return {};
        }
    if (label == 0) return {};

    // Triple points and crossings that sit on a curve's seam are rejected.
    for (auto& h : hits) {
        std::sort(h.begin(), h.end(), [](const Hit& a, const Hit& b) { return a.t < b.t; });
        for (std::size_t s = 0; s < h.size(); ++s) {
            if (h[s].t < tol || h[s].t > 1.0 - tol) return {};
            if (s > 0 && near_mod1(h[s].t, h[s - 1].t, tol)) return {};
        }
    }

    std::vector<int> names(label);
    std::iota(names.begin(), names.end(), 1);
    std::shuffle(names.begin(), names.end(), rng);
    CurveSystem system;
    for (const auto& h : hits) {
        std::vector<int> entries;
        for (const Hit& x : h) entries.push_back(x.sign * names[x.label]);
        system.curves.emplace_back(std::move(entries));
    }
    return system;
}

}  // namespace

CurveSystem random_essential_system(const EssentialOptions& options, Rng& rng) {
    if (options.curves < 2) throw Error(ErrorCode::bad_input, "essential systems need at least 2 curves");
    const auto dirs = primitive_directions(std::max(1, options.max_slope));
    std::uniform_int_distribution<std::size_t> pick_dir(0, dirs.size() - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::bernoulli_distribution flip_sign(0.5);
    std::uniform_int_distribution<int> flip_count(0, std::max(0, options.flips));

    for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
        std::vector<Geodesic> gs(options.curves);
        for (auto& g : gs) {
            g.dir = dirs[pick_dir(rng)];
            if (flip_sign(rng)) g.dir = {-g.dir[0], -g.dir[1]};
            g.offset = {unit(rng), unit(rng)};
        }
        // Every curve has to cross something, which also forces two directions.
        bool lonely = false;
        for (std::size_t i = 0; i < gs.size() && !lonely; ++i) {
            lonely = true;
            for (std::size_t j = 0; j < gs.size() && lonely; ++j)
                if (gs[i].dir[0] * gs[j].dir[1] != gs[i].dir[1] * gs[j].dir[0]) lonely = false;
        }
        if (lonely) continue;

        CurveSystem system = geodesic_system(gs, options.max_labels, rng);
        if (system.curves.empty()) continue;

        const int flips = flip_count(rng);
        for (int f = 0; f < flips; ++f) {
            const auto moves = find_rototiler_moves(system);
            if (moves.empty()) break;
            std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
            try {
                system = apply_rototiler(system, moves[pick(rng)]);
            } catch (const Error&) {
                // Triangles whose borders share a curve are not flippable.
            }
        }
        if (essentiality(system).essential) return system;
    }
    throw Error(ErrorCode::bad_input, "no essential system found within " + std::to_string(options.max_attempts) +
                                          " attempts; raise the label cap or lower the curve count");
}

}  // namespace ptile

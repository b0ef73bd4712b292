#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ptile/error.hpp"
#include "ptile/tiler.hpp"
#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

using namespace ptile;
using namespace ptile::testing;

namespace {

const Complex I(0.0, 1.0);
constexpr double two_pi = 2.0 * std::numbers::pi;

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
    return n;
}

void check_interiors_disjoint(const PatchData& data) {
    for (std::size_t u = 0; u < data.cells.size(); ++u)
        for (std::size_t v = u + 1; v < data.cells.size(); ++v)
            CHECK(convex_overlap(data.cells[u].corners, data.cells[v].corners) < 1e-9);
}

}  // namespace

TEST_CASE("square tiling develops to one unit square") {
    const FundamentalDomain fd = develop(trivial(), {1.0, I});
    REQUIRE(fd.parallelograms.size() == 1);
    const auto& pg = fd.parallelograms[0];
    CHECK(pg.label == 1);
    CHECK(std::abs(pg.center) == 0.0);
    CHECK(std::abs(pg.corners[0] - Complex(-0.5, -0.5)) < 1e-15);
    CHECK(std::abs(pg.corners[2] - Complex(0.5, 0.5)) < 1e-15);
    CHECK(pg.signed_area() == doctest::Approx(1.0));
    REQUIRE(fd.vertex_angles.size() == 1);
    CHECK(fd.vertex_angles[0] == doctest::Approx(two_pi));
    CHECK(std::abs(fd.lattice.a - I) < 1e-15);
    CHECK(std::abs(fd.lattice.b + 1.0) < 1e-15);
    CHECK(fd.total_area == doctest::Approx(1.0));

    const ClosureReport rep = verify_closure(fd, square_matrix(), {1.0, I});
    CHECK(rep.max_residual() < 1e-12);
    const auto line = zone_polyline(fd, 0);
    REQUIRE(line.size() == 2);
    CHECK(std::abs(line[0] + 0.5 * I) < 1e-15);
    CHECK(std::abs(line[1] - 0.5 * I) < 1e-15);
    CHECK_THROWS_AS(zone_polyline(fd, 2), Error);
}

TEST_CASE("six parallelograms for the proof system") {
    const EdgeData e = canonical_edge_data(proof1());
    const FundamentalDomain fd = develop(proof1(), e);
    CHECK(fd.parallelograms.size() == 6);
    CHECK(fd.vertex_angles.size() == 6);
    for (double phi : fd.vertex_angles) CHECK(std::abs(phi - two_pi) < 1e-9);
    for (const auto& pg : fd.parallelograms) CHECK(pg.signed_area() > 0.0);

    const ClosureReport rep = verify_closure(fd, proof2_matrix(), e);
    CHECK(rep.max_residual() < 1e-9);
    const double lambda = 2.0 * std::sqrt(2.0);
    for (std::size_t i = 0; i < 4; ++i) {
        const auto line = zone_polyline(fd, i);
        CHECK(std::abs(line.back() - line.front() - lambda * I * e[i]) < 1e-9);
    }
    CHECK(std::abs(fd.total_area - area(proof2_matrix(), e)) < 1e-9);
    CHECK(std::abs(fd.total_area - std::abs(det_r(fd.lattice.a, fd.lattice.b))) < 1e-9);
}

TEST_CASE("zone polylines pass through the centers of their parallelograms") {
    const FundamentalDomain fd = develop(proof1(), canonical_edge_data(proof1()));
    for (std::size_t i = 0; i < 4; ++i) {
        const auto line = zone_polyline(fd, i);
        const auto& entries = fd.system.curves[i].entries();
        REQUIRE(line.size() == entries.size() + 1);
        for (std::size_t t = 0; t < entries.size(); ++t) {
            const Complex mid = 0.5 * (line[t] + line[t + 1]);
            const auto& pg = fd.parallelograms[fd.index_of(std::abs(entries[t]))];
            CHECK((pg.curve_i == i || pg.curve_j == i));
            // Same center up to a lattice translation.
            const Complex w = mid - pg.center;
            const double d = det_r(fd.lattice.a, fd.lattice.b);
            const double p = det_r(w, fd.lattice.b) / d, q = det_r(fd.lattice.a, w) / d;
            CHECK(std::abs(p - std::round(p)) < 1e-9);
            CHECK(std::abs(q - std::round(q)) < 1e-9);
        }
    }
}

TEST_CASE("develop rejects bad input") {
    EdgeData e = canonical_edge_data(proof1());
    e[0] = -e[0];
    try {
        develop(proof1(), e);
        FAIL("expected not-admissible");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::not_admissible);
    }
    try {
        develop(genus3(), EdgeData(4, 1.0));
        FAIL("expected not-essential");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::not_essential);
    }
}

TEST_CASE("closure on random admissible data of the four-curve example") {
    const IntersectionMatrix c = intersection_matrix(curve_ex());
    std::mt19937_64 rng(2024);
    const EdgeData center = canonical_edge_data(curve_ex());
    for (int trial = 0; trial < 30; ++trial) {
        const EdgeData e = sample_kernel_slice(c, center, rng);
        const FundamentalDomain fd = develop(curve_ex(), e);
        CHECK(verify_closure(fd, c, e).max_residual() < 1e-9);
        CHECK(fd.vertex_angles.size() == 5);
        CHECK(std::abs(fd.total_area - area(c, e)) < 1e-9 * area(c, e));
    }
}

TEST_CASE("development is equivariant under orientation-preserving maps") {
    const EdgeData e = canonical_edge_data(proof1());
    const RealLinearMap m{1.3, 0.4, -0.2, 0.9};
    const FundamentalDomain a = develop(proof1(), e);
    const FundamentalDomain b = develop(proof1(), apply_real_linear(m, e));
    const Complex shift = b.parallelograms[0].center - m(a.parallelograms[0].center);
    for (std::size_t k = 0; k < a.parallelograms.size(); ++k)
        for (std::size_t t = 0; t < 4; ++t)
            CHECK(std::abs(b.parallelograms[k].corners[t] - m(a.parallelograms[k].corners[t]) - shift) < 1e-9);
}

TEST_CASE("replication") {
    const FundamentalDomain sq = develop(trivial(), {1.0, I});
    CHECK(replicate(sq, {0, 1}, {0, 1}).copies.size() == 1);
    CHECK_THROWS_AS(replicate(sq, {0, 0}, {0, 1}), Error);

    const TilingPatch four = replicate(sq, {0, 2}, {0, 2});
    const PatchData data = flatten(four);
    CHECK(data.cells.size() == 4);
    check_interiors_disjoint(data);

    const FundamentalDomain fd = develop(proof1(), canonical_edge_data(proof1()));
    const TilingPatch nine = replicate(fd, {-1, 2}, {-1, 2});
    const PatchData nd = flatten(nine);
    CHECK(nd.cells.size() == 54);
    check_interiors_disjoint(nd);
    double total = 0.0;
    for (const auto& pg : fd.parallelograms) total += pg.signed_area();
    CHECK(std::abs(total - std::abs(det_r(fd.lattice.a, fd.lattice.b))) < 1e-9);
}

TEST_CASE("svg export") {
    const FundamentalDomain sq = develop(trivial(), {1.0, I});
    const std::string one = export_svg(replicate(sq, {0, 1}, {0, 1}));
    CHECK(count(one, "<polygon") == 1);
    CHECK(count(one, "<polyline") == 0);
    CHECK(one.find("<svg") != std::string::npos);

    const FundamentalDomain fd = develop(proof1(), canonical_edge_data(proof1()));
    const TilingPatch patch = replicate(fd, {0, 2}, {0, 2}, true);
    const std::string svg = export_svg(patch);
    CHECK(count(svg, "<polygon") == 24);
    CHECK(count(svg, "<polyline") == 4 * 4);
    CHECK(export_svg(patch) == svg);

    SvgOptions bare;
    bare.overlay = false;
    CHECK(count(export_svg(patch, bare), "<polyline") == 0);
    CHECK(label_color(3) == label_color(3));
    CHECK(label_color(3) != label_color(4));
    CHECK(label_color(3).size() == 7);
}

TEST_CASE("json export round-trips exactly") {
    const FundamentalDomain fd = develop(proof1(), canonical_edge_data(proof1()));
    const TilingPatch patch = replicate(fd, {0, 2}, {-1, 1}, true);
    const PatchData before = flatten(patch);
    const PatchData after = import_json(export_json(patch));
    CHECK(after.lattice.a == before.lattice.a);
    CHECK(after.lattice.b == before.lattice.b);
    REQUIRE(after.cells.size() == before.cells.size());
    for (std::size_t k = 0; k < before.cells.size(); ++k) {
        CHECK(after.cells[k].label == before.cells[k].label);
        CHECK(after.cells[k].center == before.cells[k].center);
        CHECK(after.cells[k].corners == before.cells[k].corners);
    }
    CHECK(after.zones == before.zones);
    CHECK(export_json(after) == export_json(patch));

    CHECK_THROWS_AS(import_json("{"), Error);
    CHECK_THROWS_AS(import_json("{\"lattice\":[[0,1]],\"cells\":[]}"), Error);
    CHECK_THROWS_AS(import_json("{\"lattice\":[[0,1],[1,0]],\"cells\":[{\"label\":1}]}"), Error);
}

TEST_CASE("random essential systems tile without overlaps") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 15; ++trial) {
        EssentialOptions opt;
        opt.curves = 2 + trial % 4;
        opt.max_labels = 12;
        const CurveSystem s = random_essential_system(opt, rng);
        const IntersectionMatrix c = intersection_matrix(s);
        const EdgeData e = sample_kernel_slice(c, canonical_edge_data(s), rng);
        const FundamentalDomain fd = develop(s, e);
        CHECK(verify_closure(fd, c, e).max_residual() < 1e-9);
        check_interiors_disjoint(flatten(replicate(fd, {-1, 2}, {-1, 2})));
    }
}

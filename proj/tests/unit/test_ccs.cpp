#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ptile/ccs.hpp"
#include "ptile/error.hpp"
#include "ptile/generate.hpp"
#include "ptile/homology.hpp"
#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

using namespace ptile;
using namespace ptile::testing;

TEST_CASE("curves compare up to cyclic rotation") {
    CHECK(Curve{1, 2, 3} == Curve{2, 3, 1});
    CHECK(Curve{1, 2, 3} == Curve{3, 1, 2});
    CHECK_FALSE(Curve{1, 2, 3} == Curve{3, 2, 1});
    CHECK(Curve{-3, 4, 5}.canonical().entries() == std::vector<int>{-3, 4, 5});
    CHECK(Curve{4, 5, -3}.canonical().entries() == std::vector<int>{-3, 4, 5});
    CHECK(CurveHash{}(Curve{4, 5, -3}) == CurveHash{}(Curve{-3, 4, 5}));
}

TEST_CASE("parse the four-curve torus example") {
    const CurveSystem s = parse_curve_system("1 2 3\n-1 -4\n-2 -5\n-3 4 5\n");
    CHECK(s == curve_ex());
    CHECK(s.labels() == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("parse the minimal two-curve system") {
    const CurveSystem s = parse_curve_system("1\n-1\n");
    CHECK(s == trivial());
}

TEST_CASE("parse rejects a missing negative entry") {
    try {
        parse_curve_system("1 2\n# comment\n-1\n");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::invalid_system);
        CHECK(std::string(e.what()).find("-2") != std::string::npos);
    }
}

TEST_CASE("parse reports line and column of syntax errors") {
    try {
        parse_curves("1 2\n -1  x3\n-2\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 6);
    }
    CHECK_THROWS_AS(parse_curves("1 0\n-1\n"), ParseError);
    CHECK_THROWS_AS(parse_curves("1 -\n"), ParseError);
    CHECK_THROWS_AS(parse_curves("99999999999\n"), ParseError);
}

TEST_CASE("comments, blank lines and explicit plus signs") {
    const CurveSystem s = parse_curve_system("# header\n\n  +7 # seven\n\t-7\n\n");
    CHECK(s == CurveSystem{{7}, {-7}});
}

TEST_CASE("validate") {
    CHECK(validate(curve_ex()).ok());

    const auto same_vector = validate(CurveSystem{{1, -1}, {2}, {-2}});
    REQUIRE_FALSE(same_vector.ok());
    CHECK(std::any_of(same_vector.violations.begin(), same_vector.violations.end(),
                      [](const Violation& v) { return v.kind == ViolationKind::opposite_signs_same_curve && v.label == 1; }));

    const auto missing = validate(CurveSystem{{1, 2}, {-1}});
    REQUIRE(missing.violations.size() == 1);
    CHECK(missing.violations[0].kind == ViolationKind::missing_entry);
    CHECK(missing.violations[0].label == -2);

    CHECK(validate(CurveSystem{{1, -1}}).violations.front().kind == ViolationKind::too_few_curves);
    const auto dup = validate(CurveSystem{{1, 2}, {-1, -2, 2}});
    CHECK(std::any_of(dup.violations.begin(), dup.violations.end(),
                      [](const Violation& v) { return v.kind == ViolationKind::duplicate_entry && v.label == 2; }));
    CHECK_FALSE(validate(CurveSystem{{1}, {}, {-1}}).ok());
}

TEST_CASE("arbitrary distinct labels are kept as written") {
    const CurveSystem s = parse_curve_system("10 200\n-10 -200\n");
    CHECK(s.labels() == std::vector<int>{10, 200});
    for (const auto& face : build_faces(s))
        for (const auto& b : face.borders) CHECK((std::abs(b.start) == 10 || std::abs(b.start) == 200));
    CHECK(serialize(s) == "10 200\n-200 -10\n");
}

TEST_CASE("successor follows the worked example") {
    const CurveSystem s = curve_ex();
    CHECK(successor(Border{false, 4, 5}, s) == Border{false, -5, -2});
    CHECK(successor(Border{true, 4, 5}, s) == Border{true, -1, -4});
    CHECK(successor(Border{false, 1, 1}, trivial()) == Border{false, -1, -1});
    CHECK_THROWS_AS(successor(Border{false, 4, 9}, s), Error);
    CHECK_THROWS_AS(successor(Border{false, 1, 3}, s), Error);
}

TEST_CASE("successor is a bijection with predecessor as inverse") {
    for (const CurveSystem& s : {curve_ex(), genus3(), proof1(), trivial(), hexagon()}) {
        const auto borders = all_borders(s);
        CHECK(borders.size() == 2 * s.entry_count());
        std::set<Border> images;
        for (const Border& b : borders) {
            const Border next = successor(b, s);
            images.insert(next);
            CHECK(predecessor(next, s) == b);
        }
        CHECK(images.size() == borders.size());
    }
}

TEST_CASE("faces of the minimal system") {
    const auto faces = build_faces(trivial());
    REQUIRE(faces.size() == 1);
    const std::vector<Border> expected{{false, -1, -1}, {true, 1, 1}, {true, -1, -1}, {false, 1, 1}};
    CHECK(faces[0].borders == expected);
}

TEST_CASE("face counts") {
    const auto g3 = build_faces(genus3());
    REQUIRE(g3.size() == 1);
    CHECK(g3[0].size() == 20);
    CHECK(build_faces(curve_ex()).size() == 5);
}

TEST_CASE("face loops partition the borders and close under successor") {
    for (const CurveSystem& s : {curve_ex(), genus3(), proof1(), hexagon()}) {
        std::set<Border> all;
        std::size_t total = 0;
        for (const auto& face : build_faces(s)) {
            for (std::size_t t = 0; t < face.size(); ++t) {
                CHECK(successor(face.borders[t], s) == face.borders[(t + 1) % face.size()]);
                all.insert(face.borders[t]);
            }
            total += face.size();
            CHECK(face.borders.front() == *std::min_element(face.borders.begin(), face.borders.end()));
        }
        CHECK(total == all.size());
        CHECK(total == 2 * s.entry_count());
    }
}

TEST_CASE("surface reports") {
    const auto torus = surface_report(curve_ex());
    CHECK(torus.connected);
    CHECK(torus.genus == std::vector<int>{1});
    CHECK(torus.faces.size() == 5);
    CHECK(torus.vertex_count == 5);
    CHECK(torus.edge_count == 10);

    const auto g3 = surface_report(genus3());
    CHECK(g3.connected);
    CHECK(g3.genus == std::vector<int>{3});

    const auto sq = surface_report(trivial());
    CHECK(sq.vertex_count == 1);
    CHECK(sq.edge_count == 2);
    CHECK(sq.faces.size() == 1);
    CHECK(sq.genus == std::vector<int>{1});
}

TEST_CASE("disconnected systems get one genus per component") {
    const CurveSystem two_tori{{1}, {-1}, {2}, {-2}};
    const auto r = surface_report(two_tori);
    CHECK_FALSE(r.connected);
    CHECK(r.component_count() == 2);
    CHECK(r.genus == std::vector<int>{1, 1});
    CHECK(r.component_of_curve == std::vector<int>{0, 0, 1, 1});
    CHECK(r.euler_characteristic() == 0);
}

TEST_CASE("faces match the rotation-system oracle on the fixtures") {
    for (const CurveSystem& s : {curve_ex(), genus3(), proof1(), trivial(), hexagon()})
        CHECK(build_faces(s) == rotation_system_faces(s));
}

TEST_CASE("faces match the rotation-system oracle on random systems") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t curves = 2 + rng() % 5;
        const std::size_t labels = std::max<std::size_t>((curves + 1) / 2, 1 + rng() % 10);
        const CurveSystem s = random_valid_system(curves, labels, rng);
        REQUIRE(validate(s).ok());
        CHECK(build_faces(s) == rotation_system_faces(s));
        const auto r = surface_report(s);
        for (int c = 0; c < r.component_count(); ++c) {
            const int chi = r.component_vertices[c] - r.component_edges[c] + r.component_faces[c];
            CHECK(chi % 2 == 0);
            CHECK(chi <= 2);
            CHECK(r.genus[c] >= 0);
        }
    }
}

TEST_CASE("serialize writes canonical rotations and round-trips") {
    const CurveSystem s{{3, 1, 2}, {-1, -4}, {-5, -2}, {4, 5, -3}};
    const std::string text = serialize(s);
    CHECK(text == "1 2 3\n-4 -1\n-5 -2\n-3 4 5\n");
    CHECK(serialize(parse_curve_system(text)) == text);
    CHECK(parse_curve_system(text) == s);
}

TEST_CASE("rototiler candidates") {
    CHECK(find_rototiler_moves(trivial()).empty());
    const auto tri = find_rototiler_moves(hexagon());
    CHECK_FALSE(tri.empty());
    for (const auto& f : tri) CHECK(f.size() == 3);

    const auto faces = rotation_system_faces(curve_ex());
    std::size_t expected = std::count_if(faces.begin(), faces.end(), [](const FaceLoop& f) { return f.size() == 3; });
    CHECK(find_rototiler_moves(curve_ex()).size() == expected);
}

TEST_CASE("rototiler on the hexagon torus keeps C and is an involution") {
    const CurveSystem s = hexagon();
    const auto tri = find_rototiler_moves(s);
    REQUIRE_FALSE(tri.empty());
    const CurveSystem flipped = apply_rototiler(s, tri.front());
    CHECK(validate(flipped).ok());
    CHECK(intersection_matrix(flipped) == intersection_matrix(s));

    std::set<int> labels;
    for (const auto& b : tri.front().borders) labels.insert({std::abs(b.start), std::abs(b.end)});
    bool restored = false;
    for (const auto& f : find_rototiler_moves(flipped)) {
        std::set<int> l2;
        for (const auto& b : f.borders) l2.insert({std::abs(b.start), std::abs(b.end)});
        if (l2 == labels && apply_rototiler(flipped, f) == s) restored = true;
    }
    CHECK(restored);
}

TEST_CASE("rototiler errors") {
    const auto faces = build_faces(trivial());
    try {
        apply_rototiler(trivial(), faces.front());
        FAIL("expected not-a-triangle");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_a_triangle);
    }
    const FaceLoop bogus{{{false, 1, 2}, {false, -1, 3}, {false, -2, -3}}};
    CHECK_THROWS_AS(apply_rototiler(hexagon(), bogus), Error);
}

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "syzygy/arrangement.hpp"
#include "syzygy/sampling.hpp"

using namespace syzygy;

namespace {

ProjLine L(int a, int b, int c) { return ProjLine(Rat(a), Rat(b), Rat(c)); }
ProjPoint P(int x, int y, int z) { return ProjPoint(Rat(x), Rat(y), Rat(z)); }

ColoredArrangement five_line_witness() {
    return arrangement_from_lines(
        {L(1, 0, 2), L(1, 0, 1), L(1, 0, 0), L(1, 0, -1), L(1, 0, -2)},
        {L(1, -1, 2), L(1, -1, 1), L(1, -1, 0), L(1, -1, -1), L(1, -1, -2)}, L(0, 1, 0));
}

ColoredArrangement six_line_witness() {
    return arrangement_from_lines(
        {L(1, 0, 3), L(1, 0, 2), L(1, 0, 1), L(1, 0, 0), L(1, 0, -1), L(1, 0, -2)},
        {L(1, -1, 3), L(1, -1, 2), L(1, -1, 1), L(5, -1, 0), L(5, -1, -5), L(5, -1, -10)},
        L(0, 1, 0));
}

HomogPoly five_line_quartic() {
    AffineCoeffs a;
    a[{4, 0}] = Rat(5);
    a[{3, 1}] = Rat(-10);
    a[{2, 2}] = Rat(10);
    a[{1, 3}] = Rat(-5);
    a[{0, 4}] = Rat(1);
    a[{2, 0}] = Rat(-15);
    a[{1, 1}] = Rat(15);
    a[{0, 2}] = Rat(-5);
    a[{0, 0}] = Rat(4);
    return homogenize(a, 4);
}

HomogPoly six_line_quintic() {
    HomogPoly q(5);
    q.coeff(5, 0) = Rat(450);
    q.coeff(4, 1) = Rat(-615);
    q.coeff(4, 0) = Rat(675);
    q.coeff(3, 2) = Rat(396);
    q.coeff(3, 1) = Rat(-150);
    q.coeff(3, 0) = Rat(-2400);
    q.coeff(2, 3) = Rat(-123);
    q.coeff(2, 2) = Rat(-234);
    q.coeff(2, 1) = Rat(2250);
    q.coeff(2, 0) = Rat(-2025);
    q.coeff(1, 4) = Rat(18);
    q.coeff(1, 3) = Rat(93);
    q.coeff(1, 2) = Rat(-504);
    q.coeff(1, 1) = Rat(-375);
    q.coeff(1, 0) = Rat(2400);
    q.coeff(0, 5) = Rat(-1);
    q.coeff(0, 4) = Rat(-9);
    q.coeff(0, 3) = Rat(29);
    q.coeff(0, 2) = Rat(141);
    q.coeff(0, 1) = Rat(-460);
    q.coeff(0, 0) = Rat(300);
    return q;
}

}  // namespace

TEST_CASE("five-line witness: valid, generic, quartic recovered") {
    ColoredArrangement arr = five_line_witness();
    CHECK(arr.k == 5);
    CHECK(arr.generic);
    CHECK(arr.triple_points.size() == 5);
    PointSet pts = offgreen_points(arr);
    CHECK(pts.size() == 20);
    for (const auto& p : pts.points()) CHECK_FALSE(incident(p, arr.green));
    HomogPoly curve = construct_curve(arr);
    CHECK(curve.degree() == 4);
    CHECK(proportional(curve, five_line_quartic()));
}

TEST_CASE("six-line witness: one coincident crossing, quintic still unique") {
    ColoredArrangement arr = six_line_witness();
    CHECK(arr.k == 6);
    // red x-2z meets blue x-y+3z and blue 5x-y-5z at the same point, so
    // the genericity flag is off and only 29 distinct crossings exist.
    CHECK_FALSE(arr.generic);
    ProjPoint coincidence = meet(arr.red[5], arr.blue[0]);
    CHECK(coincidence == meet(arr.red[5], arr.blue[4]));
    CHECK(coincidence == P(2, 5, 1));
    PointSet pts = offgreen_points(arr);
    CHECK(pts.size() == 29);
    HomogPoly curve = construct_curve(arr);
    CHECK(curve.degree() == 5);
    CHECK(proportional(curve, six_line_quintic()));
}

TEST_CASE("k=2 arrangement: the curve through both crossings is a line") {
    ColoredArrangement arr =
        arrangement_from_lines({L(1, 0, 0), L(1, 0, -1)}, {L(1, -1, 0), L(1, -1, -1)},
                               L(0, 1, 0));
    PointSet pts = offgreen_points(arr);
    CHECK(pts.size() == 2);
    HomogPoly curve = construct_curve(arr);
    CHECK(curve.degree() == 1);
    for (const auto& p : pts.points()) CHECK(curve.vanishes_at(p));
}

TEST_CASE("make_arrangement reproduces the witness from points and directions") {
    ColoredArrangement ref = five_line_witness();
    std::vector<ProjPoint> triple, red_dirs, blue_dirs;
    for (std::size_t i = 0; i < ref.k; ++i) {
        triple.push_back(ref.triple_points[i]);
        auto [r0, r1] = detail::line_span(ref.red[i]);
        red_dirs.push_back(incident(r0, ref.green) ? r1 : r0);
        auto [b0, b1] = detail::line_span(ref.blue[i]);
        blue_dirs.push_back(incident(b0, ref.green) ? b1 : b0);
    }
    ColoredArrangement rebuilt = make_arrangement(ref.green, triple, red_dirs, blue_dirs);
    CHECK(rebuilt.red == ref.red);
    CHECK(rebuilt.blue == ref.blue);
    CHECK(rebuilt.green == ref.green);
}

TEST_CASE("make_arrangement rejects structural defects") {
    ProjLine green = L(0, 1, 0);
    std::vector<ProjPoint> triple{P(1, 0, 1), P(2, 0, 1)};
    std::vector<ProjPoint> dirs{P(0, 1, 0), P(1, 1, 0)};
    SECTION("triple point off the green line") {
        CHECK_THROWS_AS(make_arrangement(green, {P(1, 1, 1), P(2, 0, 1)}, dirs, dirs),
                        DegenerateArrangement);
    }
    SECTION("coincident triple points collapse two lines") {
        CHECK_THROWS_AS(make_arrangement(green, {P(1, 0, 1), P(1, 0, 1)}, dirs,
                                         {P(1, 2, 0), P(1, 3, 0)}),
                        DegenerateArrangement);
    }
    SECTION("direction point on the green line") {
        CHECK_THROWS_AS(
            make_arrangement(green, triple, {P(1, 0, 0), P(1, 1, 0)}, dirs),
            DegenerateArrangement);
    }
    SECTION("count mismatch") {
        CHECK_THROWS_AS(make_arrangement(green, triple, {P(0, 1, 0)}, dirs),
                        DegenerateArrangement);
    }
    SECTION("same triple point with equal red and blue direction") {
        CHECK_THROWS_AS(make_arrangement(green, triple, dirs, dirs),
                        DegenerateArrangement);
    }
}

TEST_CASE("equal slopes through distinct triple points are fine") {
    // Both red lines head in the same direction; still distinct lines.
    ColoredArrangement arr = make_arrangement(
        L(0, 1, 0), {P(1, 0, 1), P(2, 0, 1)}, {P(0, 1, 0), P(0, 1, 0)},
        {P(1, 1, 0), P(1, 2, 0)});
    CHECK(arr.red[0] != arr.red[1]);
    CHECK(arr.k == 2);
}

TEST_CASE("random arrangements: unique curve, color swap, relabeling") {
    for (std::size_t k = 2; k <= 6; ++k) {
        for (std::uint64_t trial = 0; trial < 5; ++trial) {
            Rng rng = trial_rng(1000 * k, trial);
            ColoredArrangement arr = random_arrangement(k, rng);
            REQUIRE(arr.generic);
            PointSet pts = offgreen_points(arr);
            CHECK(pts.size() == k * k - k);
            HomogPoly curve = construct_curve(arr);
            CHECK(curve.degree() == static_cast<int>(k) - 1);
            for (const auto& p : pts.points()) CHECK(curve.vanishes_at(p));

            ColoredArrangement swapped =
                arrangement_from_lines(arr.blue, arr.red, arr.green);
            CHECK(proportional(construct_curve(swapped), curve));

            std::vector<ProjLine> red = arr.red, blue = arr.blue;
            std::rotate(red.begin(), red.begin() + 1, red.end());
            std::rotate(blue.begin(), blue.begin() + 1, blue.end());
            ColoredArrangement relabeled = arrangement_from_lines(red, blue, arr.green);
            CHECK(proportional(construct_curve(relabeled), curve));
        }
    }
}

TEST_CASE("pappus: classical instance and its degeneracies") {
    ProjPoint A = P(1, 0, 1), B = P(2, 0, 1), C = P(3, 0, 1);
    ProjPoint a = P(1, 1, 1), b = P(2, 1, 1), c = P(3, 1, 1);
    ProjLine l = pappus_check(A, B, C, a, b, c);
    CHECK(l == L(3, 2, -7));
    for (const auto& p : {P(1, 2, 1), P(4, 1, 2), P(3, -1, 1)}) CHECK(incident(p, l));

    SECTION("cyclic relabeling of the second triple still collinear") {
        CHECK_NOTHROW(pappus_check(A, B, C, b, c, a));
        CHECK_NOTHROW(pappus_check(A, B, C, c, a, b));
    }
    SECTION("repeated point rejected") {
        CHECK_THROWS_AS(pappus_check(A, B, C, A, b, c), DegenerateInput);
    }
    SECTION("non-collinear triple rejected") {
        CHECK_THROWS_AS(pappus_check(A, B, P(3, 2, 1), a, b, c), DegenerateInput);
    }
    SECTION("coinciding carrier lines rejected") {
        CHECK_THROWS_AS(pappus_check(A, B, C, P(4, 0, 1), P(5, 0, 1), P(6, 0, 1)),
                        DegenerateInput);
    }
}

TEST_CASE("pascal: conic hexagons") {
    Conic conic = Conic::standard();
    auto cp = [](int t) { return conic_point(Rat(t)); };
    SECTION("t = 0..5") {
        ProjLine l = pascal_check({cp(0), cp(2), cp(4), cp(1), cp(3), cp(5)}, conic);
        CHECK(l == L(1, -5, 8));
    }
    SECTION("opposite edges parallel: the line at infinity") {
        ProjLine l = pascal_check({cp(-1), cp(-2), cp(-3), cp(1), cp(3), cp(2)}, conic);
        CHECK(l == L(0, 0, 1));
    }
    SECTION("point off the conic rejected") {
        CHECK_THROWS_AS(
            pascal_check({cp(0), cp(1), cp(2), cp(3), cp(4), P(1, 1, 2)}, conic),
            PointsNotOnConic);
    }
    SECTION("repeated point rejected") {
        CHECK_THROWS_AS(pascal_check({cp(0), cp(1), cp(2), cp(3), cp(4), cp(0)}, conic),
                        DegenerateInput);
    }
    SECTION("wrong count rejected") {
        CHECK_THROWS_AS(pascal_check({cp(0), cp(1), cp(2)}, conic), DegenerateInput);
    }
}

TEST_CASE("brianchon: circumscribed hexagon diagonals concur") {
    Conic conic = Conic::standard();
    std::vector<ProjLine> tangents;
    for (int t = 0; t <= 5; ++t) tangents.push_back(conic.polar(conic_point(Rat(t))));
    ProjPoint p = brianchon_check(tangents, conic);
    CHECK(p == P(16, 5, 2));

    SECTION("repeated tangent rejected") {
        auto bad = tangents;
        bad[5] = bad[0];
        CHECK_THROWS_AS(brianchon_check(bad, conic), DegenerateInput);
    }
    SECTION("non-tangent line rejected") {
        auto bad = tangents;
        bad[5] = L(1, 1, 1);
        CHECK_THROWS_AS(brianchon_check(bad, conic), DegenerateInput);
    }
}

TEST_CASE("mobius octagon: stored generator instance") {
    auto inst = detail::mobius_octagon(
        {Rat(-3), Rat(-1), Rat(0), Rat(1), Rat(2), Rat(4), Rat(5)});
    REQUIRE(inst.has_value());
    CHECK(inst->vertices.size() == 8);
    CHECK(inst->green == L(37, -69, 80));
    MobiusReport rep = mobius_check(inst->vertices, inst->green, Conic::standard());
    CHECK(rep.off_vertex_total == 8);
    CHECK(rep.count_on_green == 4);
    CHECK(rep.verdict == Verdict::confirmed);
}

TEST_CASE("mobius hexagon: three crossings, all on the pascal line") {
    auto inst = detail::mobius_hexagon({Rat(-2), Rat(-1), Rat(0), Rat(1), Rat(3), Rat(4)});
    REQUIRE(inst.has_value());
    CHECK(inst->green == L(19, -13, 48));
    MobiusReport rep = mobius_check(inst->vertices, inst->green, Conic::standard());
    CHECK(rep.off_vertex_total == 3);
    CHECK(rep.count_on_green == 3);
    CHECK(rep.verdict == Verdict::confirmed);
}

TEST_CASE("mobius: random green line misses the hypothesis") {
    std::vector<ProjPoint> vertices;
    for (int t = 0; t <= 7; ++t) vertices.push_back(conic_point(Rat(t)));
    MobiusReport rep = mobius_check(vertices, L(1, 0, 10007), Conic::standard());
    CHECK(rep.count_on_green == 0);
    CHECK(rep.verdict == Verdict::hypothesis_not_met);
}

TEST_CASE("mobius: generated instances keep confirming") {
    for (std::uint64_t trial = 0; trial < 3; ++trial) {
        for (std::size_t k : {std::size_t(3), std::size_t(4)}) {
            Rng rng = trial_rng(77, 10 * k + trial);
            MobiusInstance inst = mobius_instance(k, rng);
            MobiusReport rep = mobius_check(inst.vertices, inst.green, Conic::standard());
            CHECK(rep.verdict == Verdict::confirmed);
            CHECK(rep.count_on_green >= k);
            CHECK(rep.off_vertex_total == k * k - 2 * k);
        }
    }
}

TEST_CASE("mobius input validation") {
    std::vector<ProjPoint> vertices;
    for (int t = 0; t <= 5; ++t) vertices.push_back(conic_point(Rat(t)));
    SECTION("odd count rejected") {
        auto bad = vertices;
        bad.pop_back();
        CHECK_THROWS_AS(mobius_check(bad, L(0, 1, 0), Conic::standard()), DegenerateInput);
    }
    SECTION("vertex off conic rejected") {
        auto bad = vertices;
        bad[5] = P(1, 1, 2);
        CHECK_THROWS_AS(mobius_check(bad, L(0, 1, 0), Conic::standard()),
                        PointsNotOnConic);
    }
    SECTION("green equal to an edge rejected") {
        ProjLine edge = join(vertices[0], vertices[1]);
        CHECK_THROWS_AS(mobius_check(vertices, edge, Conic::standard()), DegenerateInput);
    }
}

TEST_CASE("katz: inscribed 2d-gons give the unique lower-degree curve") {
    Conic conic = Conic::standard();
    for (std::size_t d : {std::size_t(3), std::size_t(4), std::size_t(5)}) {
        Rng rng = trial_rng(5, d);
        KatzInstance inst = katz_instance(d, rng);
        HomogPoly curve = katz_check(inst.red, inst.blue, conic);
        CHECK(curve.degree() == static_cast<int>(d) - 2);
        std::size_t off = 0;
        for (const auto& r : inst.red)
            for (const auto& b : inst.blue) {
                ProjPoint p = meet(r, b);
                if (!conic.contains(p)) {
                    ++off;
                    CHECK(curve.vanishes_at(p));
                }
            }
        CHECK(off == d * d - 2 * d);
    }
}

TEST_CASE("katz d=3 curve is the pascal line") {
    Rng rng = trial_rng(6, 0);
    KatzInstance inst = katz_instance(3, rng);
    HomogPoly curve = katz_check(inst.red, inst.blue, Conic::standard());
    const auto& v = inst.vertices;
    ProjLine pascal = pascal_check({v[0], v[2], v[4], v[1], v[3], v[5]}, Conic::standard());
    CHECK(proportional(curve, HomogPoly::from_line(pascal)));
}

TEST_CASE("katz input validation") {
    Conic conic = Conic::standard();
    SECTION("too few lines") {
        CHECK_THROWS_AS(katz_check({L(1, 0, 0), L(0, 1, 0)}, {L(1, 1, 1), L(1, -1, 1)},
                                   conic),
                        DegenerateInput);
    }
    SECTION("wrong on-conic count") {
        CHECK_THROWS_AS(katz_check({L(1, 0, 1), L(1, 0, 2), L(1, 0, 3)},
                                   {L(0, 1, 1), L(0, 1, 2), L(0, 1, 3)}, conic),
                        BadOnConicCount);
    }
    SECTION("coincident crossings") {
        // All red lines and one blue line pass through the origin.
        CHECK_THROWS_AS(katz_check({L(0, 1, 0), L(1, -1, 0), L(1, 1, 0)},
                                   {L(1, 0, 0), L(1, 0, -1), L(1, 0, 1)}, conic),
                        DegenerateInput);
    }
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "syzygy/curvefit.hpp"

using namespace syzygy;

namespace {

ProjPoint P(int x, int y, int z) { return ProjPoint(Rat(x), Rat(y), Rat(z)); }

PointSet collinear_run(int k) {
    std::vector<ProjPoint> pts;
    for (int i = 1; i <= k; ++i) pts.push_back(P(i, 0, 1));
    return PointSet(std::move(pts));
}

}  // namespace

TEST_CASE("PointSet deduplicates and ignores order") {
    PointSet a({P(1, 2, 1), P(0, 1, 1), ProjPoint(Rat(2), Rat(4), Rat(2))});
    CHECK(a.size() == 2);
    PointSet b({P(0, 1, 1), P(1, 2, 1)});
    CHECK(a == b);
    CHECK(b.subset_of(a));
    CHECK(PointSet({P(0, 1, 1)}).subset_of(a));
    CHECK_FALSE(a.subset_of(PointSet({P(0, 1, 1)})));
}

TEST_CASE("vanish_matrix of a single point at degree 1 is its triple") {
    Mat m = vanish_matrix(PointSet({P(3, -2, 5)}), 1);
    REQUIRE(m.rows() == 1);
    REQUIRE(m.cols() == 3);
    CHECK(m.at(0, 0) == 3);
    CHECK(m.at(0, 1) == -2);
    CHECK(m.at(0, 2) == 5);
}

TEST_CASE("five parametrized conic points impose independent conditions") {
    std::vector<ProjPoint> pts;
    for (int t : {-2, -1, 0, 1, 2}) pts.push_back(ProjPoint(Rat(t * t), Rat(t), Rat(1)));
    PointSet s(std::move(pts));
    CHECK(rank(vanish_matrix(s, 2)) == 5);
    auto conics = curves_through(s, 2);
    REQUIRE(conics.size() == 1);
    for (const auto& p : s.points()) CHECK(conics.front().vanishes_at(p));
}

TEST_CASE("nine collinear points at degree 3") {
    PointSet s = collinear_run(9);
    CHECK(rank(vanish_matrix(s, 3)) == 4);
    CHECK(conditions_failure(s, 3) == 5);
}

TEST_CASE("seven collinear points at degree 4 fail by two") {
    CHECK(conditions_failure(collinear_run(7), 4) == 2);
}

TEST_CASE("a single point never fails") {
    for (int d = 1; d <= 5; ++d) CHECK(conditions_failure(PointSet({P(2, 3, 1)}), d) == 0);
}

TEST_CASE("collinear failure counts across the whole small table") {
    for (int k = 3; k <= 10; ++k) {
        PointSet s = collinear_run(k);
        for (int d = 1; d <= 10; ++d) {
            std::size_t expect = d <= k - 1 ? k - (d + 1) : 0;
            CHECK(conditions_failure(s, d) == expect);
        }
    }
}

TEST_CASE("curves_through two points at degree 1 is their join") {
    PointSet s({P(1, 1, 1), P(2, 3, 1)});
    auto lines = curves_through(s, 1);
    REQUIRE(lines.size() == 1);
    ProjLine l = join(P(1, 1, 1), P(2, 3, 1));
    CHECK(proportional(lines.front(), HomogPoly::from_line(l)));
}

TEST_CASE("unique_curve_through failure modes") {
    CHECK_THROWS_AS(unique_curve_through(PointSet({P(0, 0, 1), P(1, 0, 1)}), 2), NotUnique);
    std::vector<ProjPoint> six{P(0, 0, 1), P(1, 0, 1),  P(0, 1, 1),
                               P(1, 1, 1), P(2, -1, 1), P(-1, 3, 1)};
    CHECK_THROWS_AS(unique_curve_through(PointSet(six), 2), NoCurve);
}

TEST_CASE("unique curve is invariant under input permutation") {
    std::vector<ProjPoint> pts;
    for (int t : {-2, -1, 0, 1, 2}) pts.push_back(ProjPoint(Rat(t * t), Rat(t), Rat(1)));
    HomogPoly a = unique_curve_through(PointSet(pts), 2);
    std::reverse(pts.begin(), pts.end());
    HomogPoly b = unique_curve_through(PointSet(pts), 2);
    CHECK(a == b);
}

TEST_CASE("failure is monotone under adding one point") {
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<int> c(-6, 6);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<ProjPoint> pts;
        for (int i = 0; i < 6; ++i) pts.push_back(P(c(rng), c(rng), 1));
        PointSet base(pts);
        std::size_t f0 = conditions_failure(base, 2);
        pts.push_back(P(c(rng), c(rng), 1));
        PointSet bigger(pts);
        if (bigger.size() == base.size()) continue;
        std::size_t f1 = conditions_failure(bigger, 2);
        CHECK(f1 >= f0);
        CHECK(f1 <= f0 + 1);
    }
}

TEST_CASE("cb_dimension rejects a non-subset") {
    PointSet gamma({P(0, 0, 1), P(1, 0, 1)});
    PointSet prime({P(5, 5, 1)});
    CHECK_THROWS_AS(cb_dimension(prime, gamma, 1, 2, 2), BadPartition);
}

TEST_CASE("cb_dimension vanishes when the partition is trivial") {
    PointSet gamma({P(0, 0, 1), P(1, 0, 1), P(0, 1, 1)});
    CHECK(cb_dimension(gamma, gamma, 2, 3, 3) == 0);
}

TEST_CASE("two transverse quintic line unions split as the count predicts") {
    // Five horizontal-slope red lines and five slanted blue lines through the
    // five x-axis points used by the degree-4 interpolation instance.
    std::vector<ProjLine> red, blue;
    for (int c : {2, 1, 0, -1, -2}) {
        red.push_back(ProjLine(Rat(1), Rat(0), Rat(c)));
        blue.push_back(ProjLine(Rat(1), Rat(-1), Rat(c)));
    }
    ProjLine green(Rat(0), Rat(1), Rat(0));
    std::vector<ProjPoint> all, off, on;
    for (const auto& r : red)
        for (const auto& b : blue) {
            ProjPoint p = meet(r, b);
            all.push_back(p);
            (incident(p, green) ? on : off).push_back(p);
        }
    PointSet gamma(all), gamma_prime(off), gamma_rest(on);
    REQUIRE(gamma.size() == 25);
    REQUIRE(gamma_prime.size() == 20);
    REQUIRE(gamma_rest.size() == 5);
    CHECK(set_difference(gamma, gamma_prime) == gamma_rest);
    // d=4, d1=d2=5: the left side of the count equals the failure of the
    // five collinear residual points on degree 7-4=3.
    std::size_t left = cb_dimension(gamma_prime, gamma, 4, 5, 5);
    std::size_t right = conditions_failure(gamma_rest, 3);
    CHECK(left == 1);
    CHECK(right == 1);
    CHECK_THROWS_AS(cb_dimension(gamma_prime, gamma, 8, 5, 5), BadInput);
}

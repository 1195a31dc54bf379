#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "syzygy/projective.hpp"

using namespace syzygy;

namespace {
ProjLine L(int a, int b, int c) { return ProjLine(Rat(a), Rat(b), Rat(c)); }
ProjPoint P(int x, int y, int z) { return ProjPoint(Rat(x), Rat(y), Rat(z)); }
}  // namespace

TEST_CASE("meet of coordinate axes") {
    CHECK(meet(L(1, 0, 0), L(0, 1, 0)) == P(0, 0, 1));
}

TEST_CASE("parallel affine lines meet at infinity") {
    CHECK(meet(L(1, 1, 1), L(1, 1, 2)) == P(1, -1, 0));
}

TEST_CASE("meet matches a hand cross product") {
    CHECK(meet(L(1, 0, 2), L(1, -1, 1)) == ProjPoint(Rat(-2), Rat(-1), Rat(1)));
}

TEST_CASE("meet of identical lines is rejected") {
    CHECK_THROWS_AS(meet(L(1, 2, 3), ProjLine(Rat(2), Rat(4), Rat(6))), IdenticalLines);
}

TEST_CASE("join through the y-axis points") {
    CHECK(join(P(0, 0, 1), P(0, 1, 0)) == L(1, 0, 0));
}

TEST_CASE("join matches a hand cross product") {
    CHECK(join(P(1, 1, 1), P(1, -1, 1)) == L(1, 0, -1));
}

TEST_CASE("join of identical points is rejected") {
    CHECK_THROWS_AS(join(P(1, 2, 3), ProjPoint(Rat(1, 2), Rat(1), Rat(3, 2))),
                    IdenticalPoints);
}

TEST_CASE("join of two meets recovers the common line") {
    ProjLine l = L(2, -3, 5), m = L(1, 1, 0), n = L(0, 1, 1);
    CHECK(join(meet(l, m), meet(l, n)) == l);
}

TEST_CASE("incidence by exact dot product") {
    CHECK_FALSE(incident(P(0, 0, 1), L(0, 0, 1)));
    CHECK(incident(P(1, -1, 0), L(1, 1, 1)));
    ProjPoint p = P(3, 4, 5), q = P(-1, 2, 2);
    CHECK(incident(p, join(p, q)));
    CHECK(incident(q, join(p, q)));
}

TEST_CASE("collinear detects rank at most 2") {
    CHECK(collinear({P(1, 0, 1), P(2, 0, 1), P(3, 0, 1)}));
    CHECK_FALSE(collinear({P(0, 0, 1), P(0, 1, 0), P(1, 0, 0)}));
}

TEST_CASE("meet of joins through a common point returns it") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-9, 9);
    int done = 0;
    while (done < 10) {
        ProjPoint p(Rat(d(rng)), Rat(d(rng)), Rat(1));
        ProjPoint q(Rat(d(rng)), Rat(d(rng)), Rat(1));
        ProjPoint r(Rat(d(rng)), Rat(d(rng)), Rat(1));
        if (p == q || p == r || collinear({p, q, r})) continue;
        CHECK(meet(join(p, q), join(p, r)) == p);
        ++done;
    }
}

TEST_CASE("canonical representative ignores scaling") {
    CHECK(ProjPoint(Rat(2, 3), Rat(-4, 3), Rat(2)) == P(1, -2, 3));
    CHECK(ProjPoint(Rat(-5), Rat(0), Rat(10)) == ProjPoint(Rat(1), Rat(0), Rat(-2)));
    CHECK(ProjLine(Rat(0), Rat(-1, 7), Rat(3)) == L(0, 1, -21));
}

TEST_CASE("duality swaps points and lines coherently") {
    CHECK(dual_point(L(0, 0, 1)) == P(0, 0, 1));
    ProjPoint p = P(3, -2, 1);
    CHECK(dual_point(dual_line(p)) == p);
    ProjPoint p1 = P(1, 2, 1), p2 = P(3, 1, 1);
    ProjLine l = join(p1, p2);
    CHECK(dual_point(l) == meet(dual_line(p1), dual_line(p2)));
}

TEST_CASE("collinearity dualizes to concurrency") {
    std::vector<ProjPoint> pts{P(1, 1, 1), P(2, 1, 1), P(5, 1, 1)};
    REQUIRE(collinear(pts));
    CHECK(concurrent({dual_line(pts[0]), dual_line(pts[1]), dual_line(pts[2])}));
}

TEST_CASE("unit circle form is self-dual") {
    Conic circle = Conic::from_coeffs({Rat(1), Rat(0), Rat(0), Rat(1), Rat(0), Rat(-1)});
    CHECK(dual_conic(circle) == circle);
}

TEST_CASE("standard conic parametrization and tangency") {
    Conic c = Conic::standard();
    CHECK(conic_point(Rat(0)) == P(0, 0, 1));
    CHECK(conic_point(Rat(2)) == P(4, 2, 1));
    CHECK(conic_point(std::nullopt) == P(1, 0, 0));
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-20, 20);
    for (int i = 0; i < 10; ++i) {
        Rat t(num(rng), 1 + i);
        ProjPoint p = conic_point(t);
        CHECK(c.contains(p));
        ProjLine tan = c.polar(p);
        CHECK(incident(p, tan));
        CHECK(c.tangent_to(tan));
    }
    CHECK_FALSE(c.tangent_to(ProjLine(Rat(0), Rat(1), Rat(0))));
}

TEST_CASE("dual conic of the standard conic is nondegenerate") {
    Conic d = dual_conic(Conic::standard());
    CHECK(d.det() != 0);
    CHECK(dual_conic(d) == Conic::standard());
}

TEST_CASE("degenerate conic has no dual") {
    Conic rank1 = Conic::from_coeffs({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)});
    CHECK_THROWS_AS(dual_conic(rank1), DegenerateConic);
}

TEST_CASE("zero triples are rejected") {
    CHECK_THROWS_AS(ProjPoint(Rat(0), Rat(0), Rat(0)), BadInput);
    CHECK_THROWS_AS(ProjLine(Rat(0), Rat(0), Rat(0)), BadInput);
}

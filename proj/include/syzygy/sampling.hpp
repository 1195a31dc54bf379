#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "syzygy/arrangement.hpp"
#include "syzygy/elliptic.hpp"
#include "syzygy/projective.hpp"
#include "syzygy/rational.hpp"

namespace syzygy {

using Rng = std::mt19937_64;

/// Reproducible per-trial generator: trial i of a run seeded s draws from
/// mt19937_64(s + i), independent of execution order.
inline Rng trial_rng(std::uint64_t base_seed, std::uint64_t trial) {
    return Rng(base_seed + trial);
}

namespace detail {

inline int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::vector<Rat> distinct_rationals(Rng& rng, std::size_t n, int lo, int hi) {
    std::set<int> seen;
    while (seen.size() < n) seen.insert(rand_int(rng, lo, hi));
    std::vector<Rat> out;
    for (int v : seen) out.push_back(Rat(v));
    std::shuffle(out.begin(), out.end(), rng);
    return out;
}

/// Two distinct points spanning a line; p(t) = p0 + t*p1 then parametrizes
/// all of the line except p1 itself.
inline std::pair<ProjPoint, ProjPoint> line_span(const ProjLine& l) {
    const auto& c = l.coeffs();
    std::vector<std::array<Int, 3>> cands{{c[1], -c[0], Int(0)},
                                          {c[2], Int(0), -c[0]},
                                          {Int(0), c[2], -c[1]}};
    std::vector<ProjPoint> pts;
    for (const auto& v : cands) {
        if (v[0] == 0 && v[1] == 0 && v[2] == 0) continue;
        ProjPoint p(v);
        if (pts.empty() || p != pts[0]) pts.push_back(p);
        if (pts.size() == 2) return {pts[0], pts[1]};
    }
    throw BadInput("line_span: degenerate line");
}

inline ProjPoint affine_combo(const ProjPoint& p0, const Rat& t, const ProjPoint& p1) {
    return ProjPoint(Rat(p0.x()) + t * Rat(p1.x()), Rat(p0.y()) + t * Rat(p1.y()),
                     Rat(p0.z()) + t * Rat(p1.z()));
}

}  // namespace detail

inline ProjPoint random_point(Rng& rng, int bound = 9) {
    while (true) {
        int a = detail::rand_int(rng, -bound, bound);
        int b = detail::rand_int(rng, -bound, bound);
        int c = detail::rand_int(rng, -bound, bound);
        if (a == 0 && b == 0 && c == 0) continue;
        return ProjPoint(Rat(a), Rat(b), Rat(c));
    }
}

inline ProjLine random_line(Rng& rng, int bound = 9) {
    while (true) {
        int a = detail::rand_int(rng, -bound, bound);
        int b = detail::rand_int(rng, -bound, bound);
        int c = detail::rand_int(rng, -bound, bound);
        if (a == 0 && b == 0 && c == 0) continue;
        return ProjLine(Rat(a), Rat(b), Rat(c));
    }
}

/// Random generic k-arrangement: random green line, k distinct triple
/// points on it, one random off-green direction per colored line. Draws are
/// rejected until the result validates and its genericity flag is true.
inline ColoredArrangement random_arrangement(std::size_t k, Rng& rng) {
    if (k < 1) throw BadInput("random_arrangement: k must be at least 1");
    for (int attempt = 0; attempt < 500; ++attempt) {
        ProjLine green = random_line(rng);
        auto [p0, p1] = detail::line_span(green);
        std::vector<Rat> ts = detail::distinct_rationals(rng, k, -30, 30);
        std::vector<ProjPoint> triple;
        for (const Rat& t : ts) triple.push_back(detail::affine_combo(p0, t, p1));
        auto off_green_point = [&]() -> ProjPoint {
            while (true) {
                ProjPoint p = random_point(rng);
                if (!incident(p, green)) return p;
            }
        };
        std::vector<ProjPoint> red_dirs, blue_dirs;
        for (std::size_t i = 0; i < k; ++i) {
            red_dirs.push_back(off_green_point());
            blue_dirs.push_back(off_green_point());
        }
        try {
            ColoredArrangement arr = make_arrangement(green, triple, red_dirs, blue_dirs);
            if (arr.generic) return arr;
        } catch (const DegenerateArrangement&) {
        }
    }
    throw DegenerateArrangement("random_arrangement: sampling did not converge");
}

struct PappusInstance {
    std::array<ProjPoint, 3> first;   // A, B, C on one line
    std::array<ProjPoint, 3> second;  // a, b, c on another
};

/// Two random carrier lines with three random points each, rejected until
/// the Pappus construction is non-degenerate.
inline PappusInstance pappus_instance(Rng& rng) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        ProjLine l1 = random_line(rng);
        ProjLine l2 = random_line(rng);
        if (l1 == l2) continue;
        ProjPoint common = meet(l1, l2);
        auto sample_triple = [&](const ProjLine& l) -> std::optional<std::array<ProjPoint, 3>> {
            auto [p0, p1] = detail::line_span(l);
            std::vector<Rat> ts = detail::distinct_rationals(rng, 3, -30, 30);
            std::array<ProjPoint, 3> out{detail::affine_combo(p0, ts[0], p1),
                                         detail::affine_combo(p0, ts[1], p1),
                                         detail::affine_combo(p0, ts[2], p1)};
            for (const auto& p : out)
                if (p == common) return std::nullopt;
            return out;
        };
        auto t1 = sample_triple(l1);
        auto t2 = sample_triple(l2);
        if (!t1 || !t2) continue;
        try {
            pappus_check((*t1)[0], (*t1)[1], (*t1)[2], (*t2)[0], (*t2)[1], (*t2)[2]);
            return PappusInstance{*t1, *t2};
        } catch (const DegenerateInput&) {
        }
    }
    throw DegenerateInput("pappus_instance: sampling did not converge");
}

/// Six distinct points on the standard conic, rejected until the hexagon
/// construction is non-degenerate.
inline std::vector<ProjPoint> pascal_instance(Rng& rng) {
    Conic conic = Conic::standard();
    for (int attempt = 0; attempt < 500; ++attempt) {
        std::vector<Rat> ts = detail::distinct_rationals(rng, 6, -30, 30);
        std::vector<ProjPoint> pts;
        for (const Rat& t : ts) pts.push_back(conic_point(t));
        try {
            pascal_check(pts, conic);
            return pts;
        } catch (const DegenerateInput&) {
        }
    }
    throw DegenerateInput("pascal_instance: sampling did not converge");
}

struct MobiusInstance {
    std::vector<ProjPoint> vertices;
    ProjLine green;
};

namespace detail {

/// Hexagon case: the three non-adjacent red/blue crossings are the
/// opposite-edge intersections, collinear outright, so the line through
/// two of them carries all k = 3.
inline std::optional<MobiusInstance> mobius_hexagon(const std::vector<Rat>& ts) {
    Conic conic = Conic::standard();
    std::vector<ProjPoint> v;
    for (const Rat& t : ts) v.push_back(conic_point(t));
    std::vector<ProjLine> e;
    for (std::size_t i = 0; i < 6; ++i) {
        if (v[i] == v[(i + 1) % 6]) return std::nullopt;
        e.push_back(join(v[i], v[(i + 1) % 6]));
    }
    ProjPoint x1 = meet(e[0], e[3]);
    ProjPoint x2 = meet(e[2], e[5]);
    if (x1 == x2) return std::nullopt;
    MobiusInstance inst{v, join(x1, x2)};
    try {
        MobiusReport rep = mobius_check(inst.vertices, inst.green, conic);
        if (rep.verdict != Verdict::confirmed) return std::nullopt;
    } catch (const DegenerateInput&) {
        return std::nullopt;
    }
    return inst;
}

/// Octagon case: seven vertices are free; the green line goes through the
/// crossings e0∩e3 and e2∩e5, and the last parameter is chosen so that e6
/// passes through green∩e1. That incidence is a quadratic in t7 with the
/// known root t6 (collapsing v7 onto v6), so the other root is rational by
/// Vieta; three forced points on green make the theorem supply a fourth.
inline std::optional<MobiusInstance> mobius_octagon(const std::vector<Rat>& t7free) {
    Conic conic = Conic::standard();
    std::vector<ProjPoint> v;
    for (const Rat& t : t7free) v.push_back(conic_point(t));
    ProjLine e0 = join(v[0], v[1]);
    ProjLine e1 = join(v[1], v[2]);
    ProjLine e2 = join(v[2], v[3]);
    ProjLine e3 = join(v[3], v[4]);
    ProjLine e5 = join(v[5], v[6]);
    if (e0 == e3 || e2 == e5) return std::nullopt;
    ProjPoint x1 = meet(e0, e3);
    ProjPoint x2 = meet(e2, e5);
    if (x1 == x2) return std::nullopt;
    ProjLine green = join(x1, x2);
    if (green == e1) return std::nullopt;
    ProjPoint pstar = meet(green, e1);
    // det(v6, [t²:t:1], pstar) = 0 as a polynomial a t² + b t + c.
    const auto pc = pstar.coords();
    const auto vc = v[6].coords();
    Rat a = Rat(pc[1] * vc[2] - pc[2] * vc[1]);
    Rat b = Rat(pc[2] * vc[0] - pc[0] * vc[2]);
    Rat c = Rat(pc[0] * vc[1] - pc[1] * vc[0]);
    if (a == 0) return std::nullopt;
    Rat t7 = -b / a - t7free[6];
    for (const Rat& t : t7free)
        if (t7 == t) return std::nullopt;
    v.push_back(conic_point(t7));
    MobiusInstance inst{v, green};
    try {
        MobiusReport rep = mobius_check(inst.vertices, inst.green, conic);
        if (rep.verdict != Verdict::confirmed || rep.count_on_green < 4) return std::nullopt;
    } catch (const DegenerateInput&) {
        return std::nullopt;
    }
    return inst;
}

}  // namespace detail

/// 2k-gon inscribed in the standard conic together with a line through at
/// least k of its off-vertex red/blue crossings, k in {3, 4}. Exact
/// throughout; after 1000 failed draws a precomputed instance is returned
/// so the function is total.
inline MobiusInstance mobius_instance(std::size_t k, Rng& rng) {
    if (k != 3 && k != 4) throw BadInput("mobius_instance: k must be 3 or 4");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Rat> ts = detail::distinct_rationals(rng, k == 3 ? 6 : 7, -12, 12);
        auto inst = (k == 3) ? detail::mobius_hexagon(ts) : detail::mobius_octagon(ts);
        if (inst) return *inst;
    }
    if (k == 3) {
        auto inst = detail::mobius_hexagon({Rat(-2), Rat(-1), Rat(0), Rat(1), Rat(3), Rat(4)});
        if (inst) return *inst;
    } else {
        auto inst = detail::mobius_octagon(
            {Rat(-3), Rat(-1), Rat(0), Rat(1), Rat(2), Rat(4), Rat(5)});
        if (inst) return *inst;
    }
    throw DegenerateInput("mobius_instance: stored fallback rejected");
}

struct KatzInstance {
    std::vector<ProjPoint> vertices;
    std::vector<ProjLine> red;
    std::vector<ProjLine> blue;
};

/// Inscribed 2d-gon whose consecutive edges alternate colors; by
/// construction exactly the 2d vertices are red/blue crossings on the
/// conic. Rejected until all d² crossings are distinct.
inline KatzInstance katz_instance(std::size_t d, Rng& rng) {
    if (d < 3) throw BadInput("katz_instance: d must be at least 3");
    Conic conic = Conic::standard();
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Rat> ts = detail::distinct_rationals(rng, 2 * d, -30, 30);
        std::vector<ProjPoint> v;
        for (const Rat& t : ts) v.push_back(conic_point(t));
        std::vector<ProjLine> edges;
        for (std::size_t i = 0; i < 2 * d; ++i) edges.push_back(join(v[i], v[(i + 1) % (2 * d)]));
        std::set<ProjLine> uniq(edges.begin(), edges.end());
        if (uniq.size() != 2 * d) continue;
        KatzInstance inst;
        inst.vertices = v;
        for (std::size_t i = 0; i < 2 * d; ++i)
            (i % 2 == 0 ? inst.red : inst.blue).push_back(edges[i]);
        try {
            katz_check(inst.red, inst.blue, conic);
            return inst;
        } catch (const DegenerateInput&) {
        }
    }
    throw DegenerateInput("katz_instance: sampling did not converge");
}

/// Scalar multiple by repeated addition; n may be negative or zero.
inline ECPoint ec_scale(const CubicCurve& c, int n, const ECPoint& p) {
    ECPoint acc{c.base};
    ECPoint step = n >= 0 ? p : ec_neg(c, p);
    for (int i = 0; i < (n >= 0 ? n : -n); ++i) acc = ec_add(c, acc, step);
    return acc;
}

/// Random small group word in two of the seed points, coefficients in
/// [-6, 6]; keeps coordinate heights manageable while ranging over plenty
/// of distinct rational points.
inline ECPoint random_ec_point(const CubicCurve& c, const std::vector<ECPoint>& seeds,
                               Rng& rng) {
    if (seeds.empty()) throw BadInput("random_ec_point: no seed points");
    std::size_t a = static_cast<std::size_t>(
        detail::rand_int(rng, 0, static_cast<int>(seeds.size()) - 1));
    std::size_t b = static_cast<std::size_t>(
        detail::rand_int(rng, 0, static_cast<int>(seeds.size()) - 1));
    int ca = detail::rand_int(rng, -6, 6);
    int cb = detail::rand_int(rng, -6, 6);
    return ec_add(c, ec_scale(c, ca, seeds[a]), ec_scale(c, cb, seeds[b]));
}

/// Five-tuple accepted by five_point_construct. Degenerate draws are rejected;
/// after 60 failures a precomputed admissible tuple is returned so the
/// function is total.
inline std::array<ECPoint, 5> admissible_five_tuple(const CubicCurve& c,
                                                    const std::vector<ECPoint>& seeds,
                                                    Rng& rng) {
    for (int attempt = 0; attempt < 60; ++attempt) {
        std::array<ECPoint, 5> pts{ECPoint{c.base}, ECPoint{c.base}, ECPoint{c.base},
                                   ECPoint{c.base}, ECPoint{c.base}};
        for (auto& p : pts) p = random_ec_point(c, seeds, rng);
        try {
            five_point_construct(c, pts);
            return pts;
        } catch (const DegenerateChoice&) {
        }
    }
    std::array<ECPoint, 5> fallback{
        ec_point(c, ProjPoint(Rat(2), Rat(-3), Rat(-1))),
        ec_point(c, ProjPoint(Rat(2), Rat(3), Rat(-1))),
        ec_point(c, ProjPoint(Rat(1), Rat(-4), Rat(-1))),
        ec_point(c, ProjPoint(Rat(2), Rat(5), Rat(1))),
        ec_point(c, ProjPoint(Rat(4), Rat(-9), Rat(1)))};
    five_point_construct(c, fallback);
    return fallback;
}

struct DecagonInstance {
    std::vector<ProjPoint> vertices;
    std::vector<ProjLine> red;
    std::vector<ProjLine> blue;
    std::vector<ProjPoint> on_curve;
    std::vector<ProjPoint> off_curve;
};

/// 10-gon inscribed in the cubic with alternately colored edges: the five
/// red and five blue edge lines meet in 25 points of which exactly the 10
/// vertices lie on the cubic. Used for the shared-points interpolation
/// example.
inline DecagonInstance decagon_instance(const CubicCurve& c, const std::vector<ECPoint>& seeds,
                                        Rng& rng) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<ProjPoint> v;
        int guard = 0;
        while (v.size() < 10 && guard < 80) {
            ++guard;
            ProjPoint p = random_ec_point(c, seeds, rng).pt;
            if (p == c.base) continue;
            if (std::find(v.begin(), v.end(), p) != v.end()) continue;
            v.push_back(p);
        }
        if (v.size() < 10) continue;
        std::vector<ProjLine> edges;
        for (std::size_t i = 0; i < 10; ++i) edges.push_back(join(v[i], v[(i + 1) % 10]));
        std::set<ProjLine> uniq(edges.begin(), edges.end());
        if (uniq.size() != 10) continue;
        DecagonInstance inst;
        inst.vertices = v;
        for (std::size_t i = 0; i < 10; ++i)
            (i % 2 == 0 ? inst.red : inst.blue).push_back(edges[i]);
        std::set<ProjPoint> crossings;
        for (const auto& r : inst.red)
            for (const auto& b : inst.blue) crossings.insert(meet(r, b));
        if (crossings.size() != 25) continue;
        for (const auto& p : crossings)
            (c.form.vanishes_at(p) ? inst.on_curve : inst.off_curve).push_back(p);
        if (inst.on_curve.size() != 10) continue;
        return inst;
    }
    throw DegenerateInput("decagon_instance: sampling did not converge");
}

}  // namespace syzygy

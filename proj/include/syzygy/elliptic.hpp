#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "syzygy/arrangement.hpp"
#include "syzygy/poly.hpp"
#include "syzygy/projective.hpp"
#include "syzygy/rational.hpp"

namespace syzygy {

/// Smooth plane cubic with a chosen inflection point as group identity.
/// The chord-tangent law below is a group law exactly when base is a flex.
struct CubicCurve {
    HomogPoly form;
    ProjPoint base;

    CubicCurve() : form(3), base(Rat(0), Rat(1), Rat(0)) {}
    CubicCurve(HomogPoly f, ProjPoint b) : form(std::move(f)), base(b) {}
};

/// A point validated to lie on a specific cubic; made by ec_point.
struct ECPoint {
    ProjPoint pt;

    bool operator==(const ECPoint& o) const { return pt == o.pt; }
    bool operator!=(const ECPoint& o) const { return pt != o.pt; }
};

namespace detail {

/// Gradient of a form at a point, evaluated at the canonical representative.
inline std::array<Rat, 3> gradient_at(const HomogPoly& f, const ProjPoint& p) {
    const std::array<Int, 3> c = p.coords();
    auto power = [](const Int& b, int e) -> Int {
        Int m(1);
        for (int i = 0; i < e; ++i) m *= b;
        return m;
    };
    std::array<Rat, 3> g{Rat(0), Rat(0), Rat(0)};
    auto ms = monomials(f.degree());
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const Rat& co = f.coeffs()[i];
        if (co == 0) continue;
        const auto& e = ms[i];
        for (int axis = 0; axis < 3; ++axis) {
            if (e[axis] == 0) continue;
            Int m = power(c[0], e[0] - (axis == 0)) * power(c[1], e[1] - (axis == 1)) *
                    power(c[2], e[2] - (axis == 2));
            g[axis] += co * Rat(e[axis]) * Rat(m);
        }
    }
    return g;
}

/// Coefficients c_0..c_d of f(s*p + t*q) with c_i multiplying s^(d-i) t^i.
inline std::vector<Rat> restrict_to_line(const HomogPoly& f, const ProjPoint& p,
                                         const ProjPoint& q) {
    int d = f.degree();
    const std::array<Int, 3> pc = p.coords();
    const std::array<Int, 3> qc = q.coords();
    // powers[axis][e] = the degree-e binary form (s*pc[axis] + t*qc[axis])^e.
    std::array<std::vector<std::vector<Rat>>, 3> powers;
    for (int axis = 0; axis < 3; ++axis) {
        powers[axis].resize(d + 1);
        powers[axis][0] = {Rat(1)};
        for (int e = 1; e <= d; ++e) {
            const auto& prev = powers[axis][e - 1];
            std::vector<Rat> cur(e + 1, Rat(0));
            for (int i = 0; i < e; ++i) {
                cur[i] += prev[i] * Rat(pc[axis]);
                cur[i + 1] += prev[i] * Rat(qc[axis]);
            }
            powers[axis][e] = std::move(cur);
        }
    }
    std::vector<Rat> out(d + 1, Rat(0));
    auto ms = monomials(d);
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const Rat& co = f.coeffs()[i];
        if (co == 0) continue;
        const auto& e = ms[i];
        // Convolve the three power expansions, degree d total.
        std::vector<Rat> acc{Rat(1)};
        for (int axis = 0; axis < 3; ++axis) {
            if (e[axis] == 0) continue;
            const auto& fac = powers[axis][e[axis]];
            std::vector<Rat> next(acc.size() + fac.size() - 1, Rat(0));
            for (std::size_t a = 0; a < acc.size(); ++a) {
                if (acc[a] == 0) continue;
                for (std::size_t b = 0; b < fac.size(); ++b) next[a + b] += acc[a] * fac[b];
            }
            acc = std::move(next);
        }
        for (std::size_t j = 0; j < acc.size(); ++j) out[j] += co * acc[j];
    }
    return out;
}

/// Any point of the line distinct from avoid.
inline ProjPoint second_point_on(const ProjLine& l, const ProjPoint& avoid) {
    const auto& c = l.coeffs();
    std::array<std::array<Int, 3>, 3> cands{{{c[1], -c[0], Int(0)},
                                             {c[2], Int(0), -c[0]},
                                             {Int(0), c[2], -c[1]}}};
    for (const auto& v : cands) {
        if (v[0] == 0 && v[1] == 0 && v[2] == 0) continue;
        ProjPoint p(v);
        if (p != avoid) return p;
    }
    throw BadInput("second_point_on: degenerate line");
}

}  // namespace detail

/// Validates the on-curve invariant.
inline ECPoint ec_point(const CubicCurve& c, const ProjPoint& p) {
    if (!c.form.vanishes_at(p))
        throw BadInput("ec_point: " + p.str() + " is not on the cubic");
    return ECPoint{p};
}

/// Line whose coefficients are the gradient of the cubic at p; contains p
/// by the Euler relation.
inline ProjLine tangent_line(const CubicCurve& c, const ECPoint& p) {
    auto g = detail::gradient_at(c.form, p.pt);
    if (g[0] == 0 && g[1] == 0 && g[2] == 0)
        throw SingularPoint("tangent_line: gradient vanishes at " + p.pt.str());
    return ProjLine(g[0], g[1], g[2]);
}

/// Checks degree, incidence, smoothness at base, and that base is a flex:
/// the cubic restricted to the tangent line at base must be a perfect cube.
inline CubicCurve make_cubic(const HomogPoly& form, const ProjPoint& base) {
    if (form.degree() != 3) throw BadInput("make_cubic: form must have degree 3");
    if (form.is_zero()) throw BadInput("make_cubic: zero form");
    if (!form.vanishes_at(base))
        throw BadInput("make_cubic: base point " + base.str() + " is not on the cubic");
    CubicCurve c(form.normalized(), base);
    ProjLine tl = tangent_line(c, ECPoint{base});
    ProjPoint r = detail::second_point_on(tl, base);
    std::vector<Rat> cs = detail::restrict_to_line(c.form, base, r);
    if (cs[0] == 0 && cs[1] == 0 && cs[2] == 0 && cs[3] == 0)
        throw LineInsideCurve("make_cubic: the tangent at base lies inside the cubic");
    if (cs[2] != 0)
        throw BadInput("make_cubic: base point " + base.str() + " is not an inflection point");
    return c;
}

/// y²z = x³ + a·xz² + b·z³ with identity [0:1:0], always a flex.
inline CubicCurve weierstrass(const Rat& a, const Rat& b) {
    HomogPoly f(3);
    f.coeff(3, 0) = Rat(1);
    f.coeff(1, 0) = a;
    f.coeff(0, 0) = b;
    f.coeff(0, 2) = Rat(-1);
    return make_cubic(f, ProjPoint(Rat(0), Rat(1), Rat(0)));
}

/// Residual intersection of the chord through p and q (tangent when p = q)
/// with the cubic. The restriction has two known rational roots, so the
/// third is rational as well.
inline ECPoint third_point(const CubicCurve& c, const ECPoint& p, const ECPoint& q) {
    auto combine = [](const Rat& u, const ProjPoint& a, const Rat& v,
                      const ProjPoint& b) -> ProjPoint {
        return ProjPoint(u * Rat(a.x()) + v * Rat(b.x()), u * Rat(a.y()) + v * Rat(b.y()),
                         u * Rat(a.z()) + v * Rat(b.z()));
    };
    if (p.pt == q.pt) {
        ProjLine tl = tangent_line(c, p);
        ProjPoint r = detail::second_point_on(tl, p.pt);
        std::vector<Rat> cs = detail::restrict_to_line(c.form, p.pt, r);
        if (cs[0] == 0 && cs[1] == 0 && cs[2] == 0 && cs[3] == 0)
            throw LineInsideCurve("third_point: tangent line lies inside the cubic");
        // cs[0] = cs[1] = 0 (incidence and tangency); roots are t², (c2 s + c3 t).
        return ECPoint{combine(-cs[3], p.pt, cs[2], r)};
    }
    std::vector<Rat> cs = detail::restrict_to_line(c.form, p.pt, q.pt);
    if (cs[0] == 0 && cs[1] == 0 && cs[2] == 0 && cs[3] == 0)
        throw LineInsideCurve("third_point: chord lies inside the cubic");
    // cs[0] = cs[3] = 0 (both endpoints on the curve); third root of st(c1 s + c2 t).
    return ECPoint{combine(cs[2], p.pt, -cs[1], q.pt)};
}

inline ECPoint ec_neg(const CubicCurve& c, const ECPoint& p) {
    return third_point(c, p, ECPoint{c.base});
}

inline ECPoint ec_add(const CubicCurve& c, const ECPoint& p, const ECPoint& q) {
    return ec_neg(c, third_point(c, p, q));
}

/// Output of the five-point construction: 4 red and 4 blue chords of the
/// cubic, 12 of their 16 crossings on the curve, the other 4 collinear on
/// the returned green line.
struct FivePointResult {
    std::array<ProjLine, 4> red;
    std::array<ProjLine, 4> blue;
    ProjLine green;
    std::vector<ProjPoint> curve_points;
    std::vector<ProjPoint> residual_points;
};

/// Chord wiring of the constructibility procedure. With s(..) denoting the
/// residual chord point (the negated sum), the lines are
///   red:  p1p2, p4p5, s(p1,p4)s(p2,p3), s(s(s(p1,p4),s(p2,p3)), p5)p3
///   blue: p1p4, p2p3, s(s(p1,p4),s(p2,p3))p5, s(p1,p2)s(p4,p5)
/// Inputs in general position; coincidences surface as DegenerateChoice so
/// callers can resample.
inline FivePointResult five_point_construct(const CubicCurve& c, const std::array<ECPoint, 5>& pts) {
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            if (pts[i].pt == pts[j].pt)
                throw DegenerateChoice("repeated point " + pts[i].pt.str());
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            for (std::size_t l = j + 1; l < 5; ++l)
                if (collinear({pts[i].pt, pts[j].pt, pts[l].pt}))
                    throw DegenerateChoice("points " + std::to_string(i) + "," +
                                           std::to_string(j) + "," + std::to_string(l) +
                                           " are collinear");
    const ECPoint &p1 = pts[0], &p2 = pts[1], &p3 = pts[2], &p4 = pts[3], &p5 = pts[4];
    FivePointResult out;
    try {
        ECPoint s12 = third_point(c, p1, p2);
        ECPoint s14 = third_point(c, p1, p4);
        ECPoint s23 = third_point(c, p2, p3);
        ECPoint s45 = third_point(c, p4, p5);
        out.red[0] = join(p1.pt, p2.pt);
        out.red[1] = join(p4.pt, p5.pt);
        out.red[2] = join(s14.pt, s23.pt);
        out.blue[0] = join(p1.pt, p4.pt);
        out.blue[1] = join(p2.pt, p3.pt);
        ECPoint s1234 = third_point(c, s14, s23);
        out.blue[2] = join(s1234.pt, p5.pt);
        ECPoint s12345 = third_point(c, s1234, p5);
        out.red[3] = join(s12345.pt, p3.pt);
        out.blue[3] = join(s12.pt, s45.pt);
    } catch (const DegenerateInput& e) {
        throw DegenerateChoice(std::string("coincident construction: ") + e.what());
    }
    std::vector<ProjLine> all(out.red.begin(), out.red.end());
    all.insert(all.end(), out.blue.begin(), out.blue.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (all[i] == all[j])
                throw DegenerateChoice("coincident lines " + all[i].str());
    std::vector<ProjPoint> crossings;
    for (const auto& r : out.red)
        for (const auto& b : out.blue) crossings.push_back(meet(r, b));
    for (std::size_t i = 0; i < crossings.size(); ++i)
        for (std::size_t j = i + 1; j < crossings.size(); ++j)
            if (crossings[i] == crossings[j])
                throw DegenerateChoice("coincident crossings at " + crossings[i].str());
    for (const auto& p : crossings) {
        if (c.form.vanishes_at(p))
            out.curve_points.push_back(p);
        else
            out.residual_points.push_back(p);
    }
    if (out.curve_points.size() != 12)
        throw DegenerateChoice("expected 12 crossings on the cubic, found " +
                               std::to_string(out.curve_points.size()));
    if (!collinear(out.residual_points))
        throw TheoremViolation("residual points of the five-point construction "
                               "are not collinear");
    out.green = join(out.residual_points[0], out.residual_points[1]);
    for (const auto& l : all)
        if (l == out.green) throw DegenerateChoice("green line coincides with a chord");
    for (const auto& p : out.curve_points)
        if (incident(p, out.green))
            throw DegenerateChoice("curve crossing " + p.str() + " lies on the green line");
    return out;
}

/// Repackages the construction as a k=4 colored arrangement: pairing the
/// red lines with the blue lines in the order (b3, b2, b4, b1) puts each
/// red/blue crossing on the green line.
inline ColoredArrangement to_arrangement(const FivePointResult& r) {
    return arrangement_from_lines(
        {r.red[0], r.red[1], r.red[2], r.red[3]},
        {r.blue[2], r.blue[1], r.blue[3], r.blue[0]}, r.green);
}

/// y²z = x³ + 17z³, a curve with plenty of small rational points.
inline CubicCurve default_curve() { return weierstrass(Rat(0), Rat(17)); }

/// Small-height rational points on default_curve, seeds for sampling.
inline std::vector<ECPoint> default_seed_points(const CubicCurve& c) {
    std::vector<ECPoint> out;
    for (const auto& [x, y] : std::vector<std::pair<int, int>>{
             {-2, 3}, {-1, 4}, {2, 5}, {4, 9}, {8, 23}})
        out.push_back(ec_point(c, ProjPoint(Rat(x), Rat(y), Rat(1))));
    return out;
}

}  // namespace syzygy

#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "syzygy/curvefit.hpp"
#include "syzygy/poly.hpp"
#include "syzygy/projective.hpp"

namespace syzygy {

/// k red and k blue lines meeting a green line in k triple points: for each
/// i, red[i], blue[i] and green are concurrent, and the k triple points are
/// pairwise distinct. The generic flag records whether the k²−k crossings
/// away from the diagonal are pairwise distinct and all off the green line.
struct ColoredArrangement {
    std::vector<ProjLine> red;
    std::vector<ProjLine> blue;
    ProjLine green;
    std::size_t k = 0;
    std::vector<ProjPoint> triple_points;
    bool generic = false;
};

namespace detail {

inline void validate_arrangement(ColoredArrangement& arr) {
    arr.k = arr.red.size();
    if (arr.k < 1 || arr.blue.size() != arr.k)
        throw DegenerateArrangement("need k red and k blue lines, k >= 1");
    std::vector<ProjLine> all = arr.red;
    all.insert(all.end(), arr.blue.begin(), arr.blue.end());
    all.push_back(arr.green);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (all[i] == all[j])
                throw DegenerateArrangement("duplicate line " + all[i].str());
    arr.triple_points.clear();
    for (std::size_t i = 0; i < arr.k; ++i) {
        ProjPoint t = meet(arr.red[i], arr.blue[i]);
        if (!incident(t, arr.green))
            throw DegenerateArrangement("red/blue pair " + std::to_string(i) +
                                        " does not meet on the green line");
        arr.triple_points.push_back(t);
    }
    for (std::size_t i = 0; i < arr.k; ++i)
        for (std::size_t j = i + 1; j < arr.k; ++j)
            if (arr.triple_points[i] == arr.triple_points[j])
                throw DegenerateArrangement("triple points " + std::to_string(i) +
                                            " and " + std::to_string(j) + " coincide at " +
                                            arr.triple_points[i].str());
    // Genericity: the k²-k off-diagonal crossings pairwise distinct, none on green.
    std::vector<ProjPoint> off;
    bool generic = true;
    for (std::size_t i = 0; i < arr.k; ++i)
        for (std::size_t j = 0; j < arr.k; ++j) {
            if (i == j) continue;
            ProjPoint p = meet(arr.red[i], arr.blue[j]);
            if (incident(p, arr.green)) generic = false;
            off.push_back(p);
        }
    std::sort(off.begin(), off.end());
    if (std::adjacent_find(off.begin(), off.end()) != off.end()) generic = false;
    arr.generic = generic;
}

}  // namespace detail

/// Builds the arrangement from k triple points on the green line plus one
/// direction point per line: red[i] = join(triple_pts[i], red_dirs[i]),
/// likewise blue. Validates every structural invariant.
inline ColoredArrangement make_arrangement(const ProjLine& green,
                                           const std::vector<ProjPoint>& triple_pts,
                                           const std::vector<ProjPoint>& red_dirs,
                                           const std::vector<ProjPoint>& blue_dirs) {
    std::size_t k = triple_pts.size();
    if (k < 1 || red_dirs.size() != k || blue_dirs.size() != k)
        throw DegenerateArrangement("need k triple points, k red and k blue directions");
    for (std::size_t i = 0; i < k; ++i) {
        if (!incident(triple_pts[i], green))
            throw DegenerateArrangement("triple point " + triple_pts[i].str() +
                                        " is not on the green line");
        if (incident(red_dirs[i], green) || incident(blue_dirs[i], green))
            throw DegenerateArrangement("direction point on the green line");
    }
    ColoredArrangement arr;
    arr.green = green;
    for (std::size_t i = 0; i < k; ++i) {
        arr.red.push_back(join(triple_pts[i], red_dirs[i]));
        arr.blue.push_back(join(triple_pts[i], blue_dirs[i]));
    }
    detail::validate_arrangement(arr);
    return arr;
}

/// Wraps already-built lines (for JSON input and constructions that produce
/// lines directly); validates the same invariants.
inline ColoredArrangement arrangement_from_lines(std::vector<ProjLine> red,
                                                 std::vector<ProjLine> blue,
                                                 const ProjLine& green) {
    ColoredArrangement arr;
    arr.red = std::move(red);
    arr.blue = std::move(blue);
    arr.green = green;
    detail::validate_arrangement(arr);
    return arr;
}

/// The crossings of red and blue lines away from the green line, as a
/// deduplicated set. Requires every off-diagonal crossing to avoid the
/// green line; coincident crossings are tolerated and collapse into one
/// point (the set is smaller than k²−k exactly when that happens).
inline PointSet offgreen_points(const ColoredArrangement& arr) {
    std::vector<ProjPoint> pts;
    for (std::size_t i = 0; i < arr.k; ++i)
        for (std::size_t j = 0; j < arr.k; ++j) {
            if (i == j) continue;
            ProjPoint p = meet(arr.red[i], arr.blue[j]);
            if (incident(p, arr.green))
                throw NotGeneric("crossing " + p.str() + " of red " + std::to_string(i) +
                                 " and blue " + std::to_string(j) +
                                 " lies on the green line");
            pts.push_back(p);
        }
    return PointSet(std::move(pts));
}

/// The unique curve of degree k−1 through the off-green crossings. Nullity
/// different from 1 surfaces as NoCurve/NotUnique; on a generic arrangement
/// either would contradict the construction's uniqueness statement.
inline HomogPoly construct_curve(const ColoredArrangement& arr) {
    if (arr.k < 2) throw DegenerateArrangement("construction needs k >= 2");
    PointSet pts = offgreen_points(arr);
    HomogPoly curve = unique_curve_through(pts, static_cast<int>(arr.k) - 1);
    for (const auto& p : pts.points())
        if (!curve.vanishes_at(p))
            throw TheoremViolation("constructed curve misses " + p.str());
    return curve;
}

namespace detail {

inline void require_distinct(const std::vector<ProjPoint>& pts, const char* what) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j])
                throw DegenerateInput(std::string(what) + ": repeated point " +
                                      pts[i].str());
}

/// Common core of the two hexagon theorems: cross-intersections of the
/// pairing (A,B,C;a,b,c), asserted collinear.
inline ProjLine hexagon_line(const ProjPoint& A, const ProjPoint& B, const ProjPoint& C,
                             const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                             const char* theorem) {
    std::vector<ProjPoint> inputs{A, B, C, a, b, c};
    ProjPoint p1 = meet(join(A, a), join(b, C));
    ProjPoint p2 = meet(join(B, b), join(c, A));
    ProjPoint p3 = meet(join(C, c), join(a, B));
    for (const auto& np : {p1, p2, p3})
        for (const auto& ip : inputs)
            if (np == ip)
                throw DegenerateInput(std::string(theorem) +
                                      ": constructed point equals input " + ip.str());
    if (!collinear({p1, p2, p3}))
        throw TheoremViolation(std::string(theorem) + ": points " + p1.str() + ", " +
                               p2.str() + ", " + p3.str() + " are not collinear");
    if (p1 != p2) return join(p1, p2);
    if (p1 != p3) return join(p1, p3);
    throw DegenerateInput(std::string(theorem) + ": all three constructed points coincide");
}

}  // namespace detail

/// Two triples on two distinct lines; returns the line through the three
/// cross-intersections Aa∩bC, Bb∩cA, Cc∩aB.
inline ProjLine pappus_check(const ProjPoint& A, const ProjPoint& B, const ProjPoint& C,
                             const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    detail::require_distinct({A, B, C, a, b, c}, "pappus");
    if (!collinear({A, B, C}) || !collinear({a, b, c}))
        throw DegenerateInput("pappus: input triples must each be collinear");
    if (join(A, B) == join(a, b))
        throw DegenerateInput("pappus: the two carrier lines coincide");
    return detail::hexagon_line(A, B, C, a, b, c, "pappus");
}

/// Six distinct points of a conic; returns the line through the three
/// opposite-edge intersections of the hexagon A,a,B,b,C,c.
inline ProjLine pascal_check(const std::vector<ProjPoint>& pts, const Conic& conic) {
    if (pts.size() != 6) throw DegenerateInput("pascal: need exactly 6 points");
    detail::require_distinct(pts, "pascal");
    for (const auto& p : pts)
        if (!conic.contains(p))
            throw PointsNotOnConic("pascal: " + p.str() + " is not on the conic");
    return detail::hexagon_line(pts[0], pts[1], pts[2], pts[3], pts[4], pts[5], "pascal");
}

/// Six distinct tangent lines of a conic; returns the common point of the
/// three main diagonals of the circumscribed hexagon.
inline ProjPoint brianchon_check(const std::vector<ProjLine>& tangents, const Conic& conic) {
    if (tangents.size() != 6) throw DegenerateInput("brianchon: need exactly 6 tangents");
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            if (tangents[i] == tangents[j])
                throw DegenerateInput("brianchon: repeated tangent " + tangents[i].str());
    for (const auto& l : tangents)
        if (!conic.tangent_to(l))
            throw DegenerateInput("brianchon: " + l.str() + " is not tangent");
    std::vector<ProjPoint> v;
    for (std::size_t i = 0; i < 6; ++i) v.push_back(meet(tangents[i], tangents[(i + 1) % 6]));
    std::vector<ProjLine> diag{join(v[0], v[3]), join(v[1], v[4]), join(v[2], v[5])};
    if (!concurrent(diag))
        throw TheoremViolation("brianchon: main diagonals are not concurrent");
    if (diag[0] != diag[1]) return meet(diag[0], diag[1]);
    if (diag[0] != diag[2]) return meet(diag[0], diag[2]);
    throw DegenerateInput("brianchon: all three diagonals coincide");
}

enum class Verdict { confirmed, violated, hypothesis_not_met };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::confirmed: return "confirmed";
        case Verdict::violated: return "violated";
        default: return "hypothesis_not_met";
    }
}

struct MobiusReport {
    std::size_t count_on_green = 0;
    std::size_t off_vertex_total = 0;
    Verdict verdict = Verdict::hypothesis_not_met;
};

/// Inscribed 2k-gon with edges alternately colored (edge i joins vertex i
/// to vertex i+1 and is red iff i is even). Counts how many of the
/// crossings of non-adjacent red/blue edges land on the given line: if at
/// least k−1 do, at least k must, and the verdict says whether they do.
inline MobiusReport mobius_check(const std::vector<ProjPoint>& vertices,
                                 const ProjLine& green, const Conic& conic) {
    std::size_t n = vertices.size();
    if (n < 6 || n % 2 != 0)
        throw DegenerateInput("mobius: need an even number of vertices, at least 6");
    std::size_t k = n / 2;
    detail::require_distinct(vertices, "mobius");
    for (const auto& v : vertices)
        if (!conic.contains(v))
            throw PointsNotOnConic("mobius: vertex " + v.str() + " is not on the conic");
    std::vector<ProjLine> edge;
    for (std::size_t i = 0; i < n; ++i) edge.push_back(join(vertices[i], vertices[(i + 1) % n]));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (edge[i] == edge[j])
                throw DegenerateInput("mobius: edges " + std::to_string(i) + " and " +
                                      std::to_string(j) + " coincide");
    for (const auto& e : edge)
        if (e == green) throw DegenerateInput("mobius: green line coincides with an edge");
    std::set<ProjPoint> off;
    for (std::size_t i = 0; i < n; i += 2)
        for (std::size_t j = 1; j < n; j += 2) {
            if ((j + n - i) % n == 1 || (i + n - j) % n == 1) continue;
            ProjPoint p = meet(edge[i], edge[j]);
            if (std::find(vertices.begin(), vertices.end(), p) == vertices.end())
                off.insert(p);
        }
    MobiusReport rep;
    rep.off_vertex_total = off.size();
    for (const auto& p : off)
        if (incident(p, green)) ++rep.count_on_green;
    if (rep.count_on_green >= k)
        rep.verdict = Verdict::confirmed;
    else if (rep.count_on_green == k - 1)
        rep.verdict = Verdict::violated;
    else
        rep.verdict = Verdict::hypothesis_not_met;
    return rep;
}

/// d red and d blue lines whose d² crossings are distinct and hit a conic
/// in exactly 2d of them; returns the unique degree-(d−2) curve through
/// the other d²−2d crossings.
inline HomogPoly katz_check(const std::vector<ProjLine>& red,
                            const std::vector<ProjLine>& blue, const Conic& conic) {
    std::size_t d = red.size();
    if (d < 3 || blue.size() != d)
        throw DegenerateInput("katz: need d red and d blue lines, d >= 3");
    std::vector<ProjPoint> all;
    std::vector<ProjPoint> off;
    std::size_t on_count = 0;
    for (const auto& r : red)
        for (const auto& b : blue) {
            ProjPoint p = meet(r, b);
            all.push_back(p);
            if (conic.contains(p))
                ++on_count;
            else
                off.push_back(p);
        }
    detail::require_distinct(all, "katz");
    if (on_count != 2 * d)
        throw BadOnConicCount("katz: " + std::to_string(on_count) +
                              " crossings on the conic, expected " + std::to_string(2 * d));
    return unique_curve_through(PointSet(std::move(off)), static_cast<int>(d) - 2);
}

}  // namespace syzygy

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "syzygy/matrix.hpp"
#include "syzygy/rational.hpp"

namespace syzygy {

namespace detail {

/// Canonical representative of a nonzero rational triple up to scale:
/// primitive integers, first nonzero entry positive. Component-wise
/// equality of canonical triples is exactly projective equality.
inline std::array<Int, 3> canonical_triple(const Rat& a, const Rat& b, const Rat& c) {
    if (a == 0 && b == 0 && c == 0)
        throw BadInput("zero triple has no projective meaning");
    Int den = a.get_den();
    den = den / gcd(den, b.get_den()) * b.get_den();
    den = den / gcd(den, c.get_den()) * c.get_den();
    std::array<Int, 3> w{a.get_num() * (den / a.get_den()),
                         b.get_num() * (den / b.get_den()),
                         c.get_num() * (den / c.get_den())};
    Int g = gcd(gcd(abs(w[0]), abs(w[1])), abs(w[2]));
    for (auto& t : w) t /= g;
    for (const auto& t : w) {
        if (t != 0) {
            if (t < 0)
                for (auto& u : w) u = -u;
            break;
        }
    }
    return w;
}

inline std::array<Int, 3> cross(const std::array<Int, 3>& u, const std::array<Int, 3>& v) {
    return {u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0]};
}

}  // namespace detail

/// A point [x:y:z] of the projective plane, stored canonically.
class ProjPoint {
public:
    /// The affine origin [0:0:1].
    ProjPoint() : c_{Int(0), Int(0), Int(1)} {}
    ProjPoint(const Rat& x, const Rat& y, const Rat& z)
        : c_(detail::canonical_triple(x, y, z)) {}
    explicit ProjPoint(const std::array<Int, 3>& raw)
        : ProjPoint(Rat(raw[0]), Rat(raw[1]), Rat(raw[2])) {}

    const std::array<Int, 3>& coords() const { return c_; }
    const Int& x() const { return c_[0]; }
    const Int& y() const { return c_[1]; }
    const Int& z() const { return c_[2]; }

    bool at_infinity() const { return c_[2] == 0; }

    bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
    bool operator!=(const ProjPoint& o) const { return c_ != o.c_; }
    bool operator<(const ProjPoint& o) const { return c_ < o.c_; }

    std::string str() const {
        return "[" + c_[0].get_str() + ":" + c_[1].get_str() + ":" + c_[2].get_str() + "]";
    }

private:
    std::array<Int, 3> c_;
};

/// The line ax+by+cz = 0, canonicalized like a point.
class ProjLine {
public:
    /// The line at infinity z = 0.
    ProjLine() : c_{Int(0), Int(0), Int(1)} {}
    ProjLine(const Rat& a, const Rat& b, const Rat& c)
        : c_(detail::canonical_triple(a, b, c)) {}
    explicit ProjLine(const std::array<Int, 3>& raw)
        : ProjLine(Rat(raw[0]), Rat(raw[1]), Rat(raw[2])) {}

    const std::array<Int, 3>& coeffs() const { return c_; }

    bool operator==(const ProjLine& o) const { return c_ == o.c_; }
    bool operator!=(const ProjLine& o) const { return c_ != o.c_; }
    bool operator<(const ProjLine& o) const { return c_ < o.c_; }

    std::string str() const {
        return "{" + c_[0].get_str() + ":" + c_[1].get_str() + ":" + c_[2].get_str() + "}";
    }

private:
    std::array<Int, 3> c_;
};

inline bool incident(const ProjPoint& p, const ProjLine& l) {
    const auto& a = p.coords();
    const auto& b = l.coeffs();
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] == 0;
}

/// Intersection point of two distinct lines (cross product of coefficients).
inline ProjPoint meet(const ProjLine& l1, const ProjLine& l2) {
    if (l1 == l2) throw IdenticalLines("meet: " + l1.str() + " = " + l2.str());
    auto w = detail::cross(l1.coeffs(), l2.coeffs());
    return ProjPoint(w);
}

/// Line through two distinct points (cross product of coordinates).
inline ProjLine join(const ProjPoint& p1, const ProjPoint& p2) {
    if (p1 == p2) throw IdenticalPoints("join: " + p1.str() + " = " + p2.str());
    auto w = detail::cross(p1.coords(), p2.coords());
    return ProjLine(w);
}

/// Rank test on the coordinate rows; exact.
inline bool collinear(const std::vector<ProjPoint>& pts) {
    if (pts.size() < 3) throw BadInput("collinear needs at least 3 points");
    Mat m(pts.size(), 3);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = Rat(pts[i].coords()[j]);
    return rank(m) <= 2;
}

/// Dual statement of collinear, on coefficient rows.
inline bool concurrent(const std::vector<ProjLine>& lines) {
    if (lines.size() < 3) throw BadInput("concurrent needs at least 3 lines");
    Mat m(lines.size(), 3);
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = Rat(lines[i].coeffs()[j]);
    return rank(m) <= 2;
}

inline ProjPoint dual_point(const ProjLine& l) { return ProjPoint(l.coeffs()); }
inline ProjLine dual_line(const ProjPoint& p) { return ProjLine(p.coords()); }

/// A conic v M v = 0 with M symmetric; stored with integer entries scaled
/// to a primitive matrix.
class Conic {
public:
    /// From the symmetric matrix directly.
    explicit Conic(const std::array<std::array<Rat, 3>, 3>& m) {
        std::vector<Rat> flat;
        bool nonzero = false;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (m[i][j] != m[j][i]) throw BadInput("conic matrix not symmetric");
                flat.push_back(m[i][j]);
                if (m[i][j] != 0) nonzero = true;
            }
        if (!nonzero) throw BadInput("zero conic matrix");
        flat = normalize_primitive(std::move(flat));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m_[i][j] = flat[3 * i + j].get_num();
    }

    /// From coefficients (a0,...,a5) of a0 x² + a1 xy + a2 xz + a3 y² + a4 yz + a5 z².
    static Conic from_coeffs(const std::array<Rat, 6>& a) {
        std::array<std::array<Rat, 3>, 3> m;
        m[0] = {a[0], a[1] / 2, a[2] / 2};
        m[1] = {a[1] / 2, a[3], a[4] / 2};
        m[2] = {a[2] / 2, a[4] / 2, a[5]};
        return Conic(m);
    }

    /// The conic xz = y², rationally parametrized by conic_point.
    static Conic standard() {
        return from_coeffs({Rat(0), Rat(0), Rat(1), Rat(-1), Rat(0), Rat(0)});
    }

    const std::array<std::array<Int, 3>, 3>& sym() const { return m_; }

    Int eval(const ProjPoint& p) const {
        const auto& v = p.coords();
        Int s(0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) s += v[i] * m_[i][j] * v[j];
        return s;
    }

    bool contains(const ProjPoint& p) const { return eval(p) == 0; }

    Int det() const {
        return m_[0][0] * (m_[1][1] * m_[2][2] - m_[1][2] * m_[2][1]) -
               m_[0][1] * (m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0]) +
               m_[0][2] * (m_[1][0] * m_[2][1] - m_[1][1] * m_[2][0]);
    }

    /// Polar line of a point; for a point on the conic this is the tangent.
    ProjLine polar(const ProjPoint& p) const {
        const auto& v = p.coords();
        std::array<Rat, 3> w{};
        for (int i = 0; i < 3; ++i) {
            Int s(0);
            for (int j = 0; j < 3; ++j) s += m_[i][j] * v[j];
            w[i] = Rat(s);
        }
        if (w[0] == 0 && w[1] == 0 && w[2] == 0)
            throw DegenerateConic("polar undefined: point in the radical");
        return ProjLine(w[0], w[1], w[2]);
    }

    /// True iff the line is tangent: its dual point lies on the dual conic.
    bool tangent_to(const ProjLine& l) const;

    bool operator==(const Conic& o) const { return m_ == o.m_; }

private:
    std::array<std::array<Int, 3>, 3> m_;
};

/// Adjugate-matrix conic; tangent lines of c dualize to its points.
inline Conic dual_conic(const Conic& c) {
    if (c.det() == 0) throw DegenerateConic("dual_conic of a singular conic");
    const auto& m = c.sym();
    auto cof = [&](int i, int j) -> Int {
        int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
        return m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1];
    };
    std::array<std::array<Rat, 3>, 3> adj;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) adj[i][j] = Rat(cof(j, i));
    return Conic(adj);
}

inline bool Conic::tangent_to(const ProjLine& l) const {
    return dual_conic(*this).contains(dual_point(l));
}

/// [t²:t:1] on xz = y²; the empty optional maps to [1:0:0].
inline ProjPoint conic_point(const std::optional<Rat>& t) {
    if (!t) return ProjPoint(Rat(1), Rat(0), Rat(0));
    return ProjPoint((*t) * (*t), *t, Rat(1));
}

}  // namespace syzygy

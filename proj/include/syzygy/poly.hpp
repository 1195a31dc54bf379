#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/projective.hpp"
#include "syzygy/rational.hpp"

namespace syzygy {

/// Exponent triples of the degree-d monomials in x,y,z, in decreasing
/// lexicographic order with x > y > z. For d=2 this enumerates
/// x², xy, xz, y², yz, z².
inline std::vector<std::array<int, 3>> monomials(int d) {
    if (d < 0) throw BadInput("monomials: negative degree");
    std::vector<std::array<int, 3>> out;
    out.reserve((d + 2) * (d + 1) / 2);
    for (int ex = d; ex >= 0; --ex)
        for (int ey = d - ex; ey >= 0; --ey) out.push_back({ex, ey, d - ex - ey});
    return out;
}

/// Position of x^ex y^ey z^(d-ex-ey) in the monomials(d) order.
inline std::size_t monomial_index(int d, int ex, int ey) {
    int block = d - ex;
    return static_cast<std::size_t>(block * (block + 1) / 2 + (block - ey));
}

/// Dense homogeneous form of fixed degree; the zero form keeps its degree tag.
class HomogPoly {
public:
    explicit HomogPoly(int degree)
        : d_(degree), c_((degree + 2) * (degree + 1) / 2, Rat(0)) {
        if (degree < 0) throw BadInput("negative degree");
    }
    HomogPoly(int degree, std::vector<Rat> coeffs) : d_(degree), c_(std::move(coeffs)) {
        if (degree < 0) throw BadInput("negative degree");
        if (c_.size() != static_cast<std::size_t>((degree + 2) * (degree + 1) / 2))
            throw BadInput("coefficient count does not match degree");
    }

    static HomogPoly from_line(const ProjLine& l) {
        const auto& c = l.coeffs();
        return HomogPoly(1, {Rat(c[0]), Rat(c[1]), Rat(c[2])});
    }

    int degree() const { return d_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat& coeff(int ex, int ey) { return c_[monomial_index(d_, ex, ey)]; }
    const Rat& coeff(int ex, int ey) const { return c_[monomial_index(d_, ex, ey)]; }

    bool is_zero() const {
        for (const Rat& x : c_)
            if (x != 0) return false;
        return true;
    }

    /// Value at the canonical representative. Vanishing is scale-invariant.
    Rat eval(const ProjPoint& p) const {
        const Int &px = p.x(), &py = p.y(), &pz = p.z();
        Rat acc(0);
        std::size_t idx = 0;
        for (int ex = d_; ex >= 0; --ex)
            for (int ey = d_ - ex; ey >= 0; --ey) {
                const Rat& co = c_[idx++];
                if (co == 0) continue;
                Int m(1);
                for (int i = 0; i < ex; ++i) m *= px;
                for (int i = 0; i < ey; ++i) m *= py;
                for (int i = 0; i < d_ - ex - ey; ++i) m *= pz;
                acc += co * Rat(m);
            }
        return acc;
    }

    bool vanishes_at(const ProjPoint& p) const { return eval(p) == 0; }

    /// Primitive-integer coefficient vector with first nonzero positive;
    /// the canonical representative of the curve in P(S_d).
    HomogPoly normalized() const { return HomogPoly(d_, normalize_primitive(c_)); }

    bool operator==(const HomogPoly& o) const { return d_ == o.d_ && c_ == o.c_; }

private:
    int d_;
    std::vector<Rat> c_;
};

inline HomogPoly add(const HomogPoly& f, const HomogPoly& g) {
    if (f.degree() != g.degree())
        throw DegreeMismatch("add: degrees " + std::to_string(f.degree()) + " and " +
                             std::to_string(g.degree()));
    std::vector<Rat> c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += g.coeffs()[i];
    return HomogPoly(f.degree(), std::move(c));
}

inline HomogPoly scale(const HomogPoly& f, const Rat& s) {
    std::vector<Rat> c = f.coeffs();
    for (Rat& x : c) x *= s;
    return HomogPoly(f.degree(), std::move(c));
}

inline HomogPoly sub(const HomogPoly& f, const HomogPoly& g) {
    return add(f, scale(g, Rat(-1)));
}

inline HomogPoly multiply(const HomogPoly& f, const HomogPoly& g) {
    int d = f.degree() + g.degree();
    HomogPoly out(d);
    auto fm = monomials(f.degree());
    auto gm = monomials(g.degree());
    for (std::size_t i = 0; i < fm.size(); ++i) {
        if (f.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < gm.size(); ++j) {
            if (g.coeffs()[j] == 0) continue;
            out.coeff(fm[i][0] + gm[j][0], fm[i][1] + gm[j][1]) +=
                f.coeffs()[i] * g.coeffs()[j];
        }
    }
    return out;
}

/// Exact division by a linear form; throws NotDivisible when the form is
/// not a factor. multiply(result, line form) reproduces f coefficient-wise.
inline HomogPoly divide_by_linear(const HomogPoly& f, const ProjLine& l) {
    if (f.degree() < 1) throw NotDivisible("degree-0 form has no linear factor");
    HomogPoly lp = HomogPoly::from_line(l);
    // Leading variable of l in the x > y > z order.
    int lead = l.coeffs()[0] != 0 ? 0 : (l.coeffs()[1] != 0 ? 1 : 2);
    Rat lead_coeff = Rat(l.coeffs()[lead]);
    HomogPoly q(f.degree() - 1);
    HomogPoly r = f;
    auto rm = monomials(f.degree());
    while (!r.is_zero()) {
        std::size_t li = 0;
        while (r.coeffs()[li] == 0) ++li;  // leading term of r, lex order
        std::array<int, 3> e = rm[li];
        if (e[lead] == 0)
            throw NotDivisible("remainder has no " + std::string(1, "xyz"[lead]) +
                               " in its leading term");
        std::array<int, 3> qe = e;
        qe[lead] -= 1;
        Rat qc = r.coeffs()[li] / lead_coeff;
        q.coeff(qe[0], qe[1]) += qc;
        HomogPoly term(f.degree() - 1);
        term.coeff(qe[0], qe[1]) = qc;
        r = sub(r, multiply(term, lp));
    }
    return q;
}

/// Affine polynomial in x,y as exponent-pair -> coefficient.
using AffineCoeffs = std::map<std::pair<int, int>, Rat>;

/// z-pads an affine polynomial to a degree-d form.
inline HomogPoly homogenize(const AffineCoeffs& affine, int d) {
    HomogPoly out(d);
    for (const auto& [e, co] : affine) {
        if (e.first < 0 || e.second < 0) throw BadInput("negative exponent");
        if (e.first + e.second > d)
            throw DegreeTooLow("term x^" + std::to_string(e.first) + " y^" +
                               std::to_string(e.second) + " exceeds degree " +
                               std::to_string(d));
        out.coeff(e.first, e.second) += co;
    }
    return out;
}

/// Coefficients at z = 1; inverse of homogenize at matching degree.
inline AffineCoeffs dehomogenize(const HomogPoly& f) {
    AffineCoeffs out;
    auto ms = monomials(f.degree());
    for (std::size_t i = 0; i < ms.size(); ++i)
        if (f.coeffs()[i] != 0) out[{ms[i][0], ms[i][1]}] = f.coeffs()[i];
    return out;
}

/// True iff f and g cut the same curve: equal degree and proportional
/// nonzero coefficient vectors.
inline bool proportional(const HomogPoly& f, const HomogPoly& g) {
    if (f.degree() != g.degree()) return false;
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    return f.normalized() == g.normalized();
}

}  // namespace syzygy

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/matrix.hpp"
#include "syzygy/poly.hpp"
#include "syzygy/projective.hpp"
#include "syzygy/sampling.hpp"

namespace syzygy {

/// Completely reducible degree-d form, kept as its linear factors with the
/// expanded product cached. distinct is true iff no two factors cut the
/// same line.
struct SplitForm {
    std::vector<ProjLine> factors;
    HomogPoly product;
    bool distinct = false;
};

inline SplitForm make_split_form(std::vector<ProjLine> factors) {
    if (factors.empty()) throw BadInput("make_split_form: need at least one factor");
    HomogPoly prod = HomogPoly::from_line(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i)
        prod = multiply(prod, HomogPoly::from_line(factors[i]));
    bool distinct = true;
    for (std::size_t i = 0; i < factors.size() && distinct; ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (factors[i] == factors[j]) {
                distinct = false;
                break;
            }
    return SplitForm{std::move(factors), std::move(prod), distinct};
}

/// G_i = product of all factors except the i-th; degree d−1 each, and
/// G_i times factor i reproduces the product.
inline std::vector<HomogPoly> cofactors(const SplitForm& s) {
    std::vector<HomogPoly> out;
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
        HomogPoly g(0, {Rat(1)});
        for (std::size_t j = 0; j < s.factors.size(); ++j)
            if (j != i) g = multiply(g, HomogPoly::from_line(s.factors[j]));
        out.push_back(std::move(g));
    }
    return out;
}

/// Basis of the degree-d part of the ideal generated by the cofactors:
/// the span of m·G_i over the three degree-1 monomials m, extracted from
/// the reduced row echelon form of the 3d generator coefficient vectors.
/// This is the affine tangent space of the split-form locus at s.
inline std::vector<std::vector<Rat>> tangent_space_basis(const SplitForm& s) {
    int d = s.product.degree();
    std::vector<std::vector<Rat>> gens;
    for (const HomogPoly& g : cofactors(s))
        for (int axis = 0; axis < 3; ++axis) {
            HomogPoly m(1);
            m.coeff(axis == 0 ? 1 : 0, axis == 1 ? 1 : 0) = Rat(1);
            gens.push_back(multiply(m, g).coeffs());
        }
    RrefResult r = rref(Mat::from_rows(gens));
    std::vector<std::vector<Rat>> basis;
    for (std::size_t i = 0; i < r.rank; ++i) {
        std::vector<Rat> row(static_cast<std::size_t>((d + 2) * (d + 1) / 2));
        for (std::size_t j = 0; j < row.size(); ++j) row[j] = r.reduced.at(i, j);
        basis.push_back(std::move(row));
    }
    return basis;
}

/// dim of the sum and of the intersection of the two tangent spaces; the
/// ingredients of the secant-dimension bound.
inline std::pair<std::size_t, std::size_t> terracini_span(const SplitForm& s1,
                                                          const SplitForm& s2) {
    if (s1.product.degree() != s2.product.degree())
        throw DegreeMismatch("terracini_span: degrees " +
                             std::to_string(s1.product.degree()) + " and " +
                             std::to_string(s2.product.degree()));
    SubspaceDims dims = subspace_dims(tangent_space_basis(s1), tangent_space_basis(s2));
    return {dims.dim_sum, dims.dim_intersection};
}

/// d random linear factors with small integer coefficients, redrawn until
/// pairwise distinct.
inline SplitForm random_split_form(std::size_t d, Rng& rng) {
    if (d < 1) throw BadInput("random_split_form: d must be at least 1");
    while (true) {
        std::vector<ProjLine> factors;
        for (std::size_t i = 0; i < d; ++i) factors.push_back(random_line(rng));
        SplitForm s = make_split_form(std::move(factors));
        if (s.distinct) return s;
    }
}

struct SecantReport {
    std::size_t d = 0;
    std::size_t tangent_dim = 0;           // max affine tangent dimension seen
    std::size_t span_dim_max = 0;          // max dim of the two-tangent sum
    std::size_t secant_dim = 0;            // span_dim_max − 1, projectivized
    std::size_t intersection_dim_min = 0;  // min dim of the tangent intersection
};

/// Monte-Carlo secant dimension: the span of two generic tangent spaces,
/// maximized over seeded trials (upper-semicontinuity makes the maximum
/// the generic value), minus one for projectivization. Each trial draws a
/// pair of split forms with all 2d lines distinct.
inline SecantReport secant_dim(std::size_t d, std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw BadInput("secant_dim: need at least one trial");
    SecantReport rep;
    rep.d = d;
    rep.intersection_dim_min = std::numeric_limits<std::size_t>::max();
    for (std::size_t trial = 0; trial < trials; ++trial) {
        Rng rng = trial_rng(seed, trial);
        SplitForm s1 = random_split_form(d, rng);
        SplitForm s2 = random_split_form(d, rng);
        auto shares_factor = [&s1](const SplitForm& other) {
            for (const auto& f1 : s1.factors)
                for (const auto& f2 : other.factors)
                    if (f1 == f2) return true;
            return false;
        };
        while (shares_factor(s2)) s2 = random_split_form(d, rng);
        auto b1 = tangent_space_basis(s1);
        auto b2 = tangent_space_basis(s2);
        SubspaceDims dims = subspace_dims(b1, b2);
        rep.tangent_dim = std::max({rep.tangent_dim, dims.dim_u, dims.dim_v});
        rep.span_dim_max = std::max(rep.span_dim_max, dims.dim_sum);
        rep.intersection_dim_min = std::min(rep.intersection_dim_min, dims.dim_intersection);
    }
    rep.secant_dim = rep.span_dim_max - 1;
    return rep;
}

struct DensityCount {
    std::size_t params = 0;           // 3d+5: triple points plus slopes
    std::size_t curve_space_dim = 0;  // (d²+3d)/2: projective dim of degree-d curves
    bool dense_possible = false;
};

/// Parameter count for the syzygy construction against the dimension of
/// the space of degree-d curves; a dense image needs params to cover it.
inline DensityCount density_count(std::size_t d) {
    if (d < 1) throw BadInput("density_count: d must be at least 1");
    DensityCount out;
    out.params = 3 * d + 5;
    out.curve_space_dim = (d * d + 3 * d) / 2;
    out.dense_possible = out.curve_space_dim <= out.params;
    return out;
}

/// The pairwise intersection points of the factors; these are the singular
/// points of the split curve. Throws when factors are concurrent enough to
/// collapse two of the C(d,2) crossings.
inline std::vector<ProjPoint> pairwise_intersections(const SplitForm& s) {
    if (!s.distinct) throw DegenerateInput("pairwise_intersections: repeated factor");
    std::vector<ProjPoint> pts;
    for (std::size_t i = 0; i < s.factors.size(); ++i)
        for (std::size_t j = i + 1; j < s.factors.size(); ++j)
            pts.push_back(meet(s.factors[i], s.factors[j]));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j])
                throw DegenerateInput("pairwise_intersections: concurrent factors");
    return pts;
}

struct EvalCrossCheck {
    std::size_t points = 0;
    std::size_t rank = 0;
    std::size_t nullity = 0;
    std::size_t intersection_dim = 0;
    bool agrees = false;
};

/// Independent route to the tangent-intersection dimension: forms of
/// degree d vanishing at both forms' pairwise intersection points, read
/// off a point-evaluation matrix (20×21 at d=5). Agreement means its
/// nullity equals the subspace-arithmetic intersection dimension and every
/// nullspace vector lies in both tangent spans.
inline EvalCrossCheck point_evaluation_check(const SplitForm& s1, const SplitForm& s2) {
    if (s1.product.degree() != s2.product.degree())
        throw DegreeMismatch("point_evaluation_check: degree mismatch");
    int d = s1.product.degree();
    std::vector<ProjPoint> pts = pairwise_intersections(s1);
    std::vector<ProjPoint> pts2 = pairwise_intersections(s2);
    pts.insert(pts.end(), pts2.begin(), pts2.end());
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j])
                throw DegenerateInput("point_evaluation_check: shared singular point");
    auto ms = monomials(d);
    std::vector<std::vector<Rat>> rows;
    for (const auto& p : pts) {
        std::vector<Rat> row;
        for (const auto& e : ms) {
            Int m(1);
            for (int i = 0; i < e[0]; ++i) m *= p.x();
            for (int i = 0; i < e[1]; ++i) m *= p.y();
            for (int i = 0; i < e[2]; ++i) m *= p.z();
            row.push_back(Rat(m));
        }
        rows.push_back(std::move(row));
    }
    Mat m = Mat::from_rows(rows);
    EvalCrossCheck out;
    out.points = pts.size();
    out.rank = rank(m);
    std::vector<std::vector<Rat>> ns = nullspace(m);
    out.nullity = ns.size();
    auto b1 = tangent_space_basis(s1);
    auto b2 = tangent_space_basis(s2);
    out.intersection_dim = subspace_dims(b1, b2).dim_intersection;
    bool member = true;
    for (const auto& v : ns)
        if (!in_span(b1, v) || !in_span(b2, v)) member = false;
    out.agrees = member && out.nullity == out.intersection_dim;
    return out;
}

}  // namespace syzygy

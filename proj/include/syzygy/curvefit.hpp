#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "syzygy/matrix.hpp"
#include "syzygy/poly.hpp"
#include "syzygy/projective.hpp"

namespace syzygy {

/// Deduplicated set of projective points, held sorted so that every
/// downstream computation is independent of insertion order.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<ProjPoint> pts) : pts_(std::move(pts)) {
        std::sort(pts_.begin(), pts_.end());
        pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
    }

    std::size_t size() const { return pts_.size(); }
    const std::vector<ProjPoint>& points() const { return pts_; }
    bool contains(const ProjPoint& p) const {
        return std::binary_search(pts_.begin(), pts_.end(), p);
    }
    bool subset_of(const PointSet& o) const {
        for (const auto& p : pts_)
            if (!o.contains(p)) return false;
        return true;
    }

    bool operator==(const PointSet& o) const { return pts_ == o.pts_; }

private:
    std::vector<ProjPoint> pts_;
};

/// Evaluation matrix: row per point, column per degree-d monomial, entries
/// are monomial values at the canonical integer representatives.
inline Mat vanish_matrix(const PointSet& pts, int d) {
    if (d < 1) throw BadInput("vanish_matrix: degree must be >= 1");
    auto ms = monomials(d);
    Mat m(pts.size(), ms.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& c = pts.points()[i].coords();
        for (std::size_t j = 0; j < ms.size(); ++j) {
            Int v(1);
            for (int t = 0; t < ms[j][0]; ++t) v *= c[0];
            for (int t = 0; t < ms[j][1]; ++t) v *= c[1];
            for (int t = 0; t < ms[j][2]; ++t) v *= c[2];
            m.at(i, j) = Rat(v);
        }
    }
    return m;
}

/// Basis of the degree-d forms vanishing on every point of the set.
inline std::vector<HomogPoly> curves_through(const PointSet& pts, int d) {
    std::vector<HomogPoly> out;
    for (auto& v : nullspace(vanish_matrix(pts, d))) out.emplace_back(d, std::move(v));
    return out;
}

/// |pts| minus the rank of the evaluation matrix: how many conditions the
/// set fails to impose on degree-d forms.
inline std::size_t conditions_failure(const PointSet& pts, int d) {
    return pts.size() - rank(vanish_matrix(pts, d));
}

/// The single degree-d curve through the set, primitive-integer normalized.
/// Demands nullity exactly 1.
inline HomogPoly unique_curve_through(const PointSet& pts, int d) {
    auto basis = curves_through(pts, d);
    if (basis.empty())
        throw NoCurve("no degree-" + std::to_string(d) + " curve through " +
                      std::to_string(pts.size()) + " points (nullity 0)");
    if (basis.size() > 1)
        throw NotUnique("curve family through " + std::to_string(pts.size()) +
                        " points has dimension " + std::to_string(basis.size()));
    return basis.front().normalized();
}

/// dim{degree-d curves through gamma_prime} - dim{degree-d curves through
/// gamma}, for gamma_prime inside gamma and gamma a transverse intersection
/// of curves of degrees d1 and d2. Callers check this against the failure
/// of the complementary points on degree d1+d2-3-d.
inline std::size_t cb_dimension(const PointSet& gamma_prime, const PointSet& gamma,
                                int d, int d1, int d2) {
    if (!gamma_prime.subset_of(gamma))
        throw BadPartition("gamma_prime is not a subset of gamma");
    if (d > d1 + d2 - 3)
        throw BadInput("cb_dimension: degree " + std::to_string(d) + " exceeds " +
                       std::to_string(d1 + d2 - 3));
    std::size_t dim_prime = curves_through(gamma_prime, d).size();
    std::size_t dim_full = curves_through(gamma, d).size();
    return dim_prime - dim_full;
}

/// The complement gamma minus gamma_prime, used as the residual set in the
/// failure-count comparison.
inline PointSet set_difference(const PointSet& gamma, const PointSet& gamma_prime) {
    std::vector<ProjPoint> rest;
    for (const auto& p : gamma.points())
        if (!gamma_prime.contains(p)) rest.push_back(p);
    return PointSet(std::move(rest));
}

}  // namespace syzygy

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "syzygy/rational.hpp"

namespace syzygy {

/// Dense row-major matrix of exact rationals.
class Mat {
public:
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    static Mat from_rows(const std::vector<std::vector<Rat>>& rows) {
        std::size_t nc = rows.empty() ? 0 : rows.front().size();
        Mat m(rows.size(), nc);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != nc) throw BadInput("ragged rows");
            for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

/// Scales a rational vector to a primitive integer vector (cleared
/// denominators, content divided out) with first nonzero entry positive.
/// The zero vector is returned unchanged.
inline std::vector<Rat> normalize_primitive(std::vector<Rat> v) {
    Int den(1);
    for (const Rat& x : v) {
        Int d = x.get_den();
        den = den / gcd(den, d) * d;
    }
    Int content(0);
    for (Rat& x : v) {
        x *= Rat(den);
        x.canonicalize();
        content = gcd(content, x.get_num());
    }
    if (content == 0) return v;
    int lead_sign = 0;
    for (const Rat& x : v) {
        if (x != 0) {
            lead_sign = sgn(x.get_num());
            break;
        }
    }
    if (lead_sign < 0) content = -content;
    for (Rat& x : v) {
        x /= Rat(content);
        x.canonicalize();
    }
    return v;
}

struct RrefResult {
    Mat reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form with exact arithmetic. Pivot selection is the
/// first nonzero entry in column order; intermediate rows are kept as
/// primitive integer vectors to bound coefficient growth.
inline RrefResult rref(const Mat& m) {
    std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::vector<Rat>> rows(nr, std::vector<Rat>(nc));
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) rows[i][j] = m.at(i, j);
    for (auto& r : rows) r = normalize_primitive(std::move(r));

    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < nc && pr < nr; ++col) {
        std::size_t sel = pr;
        while (sel < nr && rows[sel][col] == 0) ++sel;
        if (sel == nr) continue;
        std::swap(rows[pr], rows[sel]);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == pr || rows[i][col] == 0) continue;
            // rows[i] <- pivot*rows[i] - rows[i][col]*rows[pr], integer-safe
            Rat p = rows[pr][col], f = rows[i][col];
            for (std::size_t j = 0; j < nc; ++j)
                rows[i][j] = p * rows[i][j] - f * rows[pr][j];
            rows[i] = normalize_primitive(std::move(rows[i]));
        }
        pivots.push_back(col);
        ++pr;
    }
    // Unit pivots for the canonical reduced form.
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        Rat p = rows[i][pivots[i]];
        for (std::size_t j = 0; j < nc; ++j) {
            rows[i][j] /= p;
            rows[i][j].canonicalize();
        }
    }
    Mat out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) out.at(i, j) = rows[i][j];
    return {std::move(out), pivots.size(), std::move(pivots)};
}

inline std::size_t rank(const Mat& m) { return rref(m).rank; }

/// Basis of { v : m v = 0 }. Each vector is primitive-integer normalized
/// with first nonzero entry positive, in free-column order.
inline std::vector<std::vector<Rat>> nullspace(const Mat& m) {
    RrefResult r = rref(m);
    std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < nc; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(nc, Rat(0));
        v[free] = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            v[r.pivot_cols[i]] = -r.reduced.at(i, free);
        basis.push_back(normalize_primitive(std::move(v)));
    }
    return basis;
}

struct SubspaceDims {
    std::size_t dim_u = 0, dim_v = 0, dim_sum = 0, dim_intersection = 0;
};

/// Dimensions of U, V, U+V and U∩V for two spanning sets of equal-length
/// vectors; the intersection dimension follows from the rank identity.
inline SubspaceDims subspace_dims(const std::vector<std::vector<Rat>>& basis_u,
                                  const std::vector<std::vector<Rat>>& basis_v) {
    std::size_t len = basis_u.empty()
                          ? (basis_v.empty() ? 0 : basis_v.front().size())
                          : basis_u.front().size();
    for (const auto& v : basis_u)
        if (v.size() != len) throw BadInput("subspace_dims: vector length mismatch");
    for (const auto& v : basis_v)
        if (v.size() != len) throw BadInput("subspace_dims: vector length mismatch");
    SubspaceDims d;
    d.dim_u = rank(Mat::from_rows(basis_u));
    d.dim_v = rank(Mat::from_rows(basis_v));
    std::vector<std::vector<Rat>> stacked = basis_u;
    stacked.insert(stacked.end(), basis_v.begin(), basis_v.end());
    d.dim_sum = rank(Mat::from_rows(stacked));
    d.dim_intersection = d.dim_u + d.dim_v - d.dim_sum;
    return d;
}

/// True iff v lies in the row space of the given spanning set.
inline bool in_span(const std::vector<std::vector<Rat>>& basis,
                    const std::vector<Rat>& v) {
    std::vector<std::vector<Rat>> stacked = basis;
    stacked.push_back(v);
    return rank(Mat::from_rows(stacked)) == rank(Mat::from_rows(basis));
}

}  // namespace syzygy

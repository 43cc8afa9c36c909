#pragma once

// Exact dense linear algebra over a field (Rational, GaussianRational,
// rational functions). Rank over the rationals goes through fraction-free
// Bareiss elimination on a denominator-cleared integer matrix.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "hodgekit/gaussian.hpp"
#include "hodgekit/rational.hpp"

namespace hodgekit {

template <class K>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<K> data;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, K{}) {}

    K& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static Mat identity(std::size_t d) {
        Mat m(d, d);
        for (std::size_t i = 0; i < d; ++i) m(i, i) = unit();
        return m;
    }

    static K unit();

    Mat transposed() const {
        Mat t(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        using hodgekit::is_zero;
        for (const K& v : data)
            if (!is_zero(v)) return false;
        return true;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        Mat out(a.rows, a.cols);
        for (std::size_t k = 0; k < a.data.size(); ++k) out.data[k] = a.data[k] + b.data[k];
        return out;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        Mat out(a.rows, a.cols);
        for (std::size_t k = 0; k < a.data.size(); ++k) out.data[k] = a.data[k] - b.data[k];
        return out;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        using hodgekit::is_zero;
        Mat out(a.rows, b.cols);
        for (std::size_t i = 0; i < a.rows; ++i)
            for (std::size_t k = 0; k < a.cols; ++k) {
                const K& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols; ++j) {
                    const K& bkj = b(k, j);
                    if (is_zero(bkj)) continue;
                    out(i, j) = out(i, j) + aik * bkj;
                }
            }
        return out;
    }
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        using hodgekit::is_zero;
        std::vector<K> out(rows, K{});
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (!is_zero((*this)(i, j))) out[i] = out[i] + (*this)(i, j) * v[j];
        return out;
    }
};

template <>
inline Rational Mat<Rational>::unit() {
    return rat(1);
}
template <>
inline GaussianRational Mat<GaussianRational>::unit() {
    return gr(1);
}
template <class K>
K Mat<K>::unit() {
    return K(1);
}

using RatMat = Mat<Rational>;
using GrMat = Mat<GaussianRational>;

// ---------------------------------------------------------------------------
// fraction-free Bareiss rank over the rationals

/// Clears denominators row by row; row scaling by positive integers keeps
/// the rank unchanged.
inline Mat<BigInt> integerized(const RatMat& m) {
    Mat<BigInt> out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < m.cols; ++j)
            l = boost::multiprecision::lcm(l, m(i, j).denominator());
        for (std::size_t j = 0; j < m.cols; ++j)
            out(i, j) = m(i, j).numerator() * (l / m(i, j).denominator());
    }
    return out;
}

inline std::size_t bareiss_rank(Mat<BigInt> a) {
    const std::size_t rows = a.rows, cols = a.cols;
    std::size_t rank = 0;
    BigInt prev = 1;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && a(sel, col) == 0) ++sel;
        if (sel == rows) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(sel, j), a(pivot_row, j));
        const BigInt pivot = a(pivot_row, col);
        for (std::size_t i = pivot_row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a(i, j) = (a(i, j) * pivot - a(i, col) * a(pivot_row, j)) / prev;
            a(i, col) = 0;
        }
        prev = pivot;
        ++pivot_row;
        ++rank;
    }
    return rank;
}

inline std::size_t rank(const RatMat& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return bareiss_rank(integerized(m));
}

// ---------------------------------------------------------------------------
// field elimination: kernel, inverse, solve, determinant

/// Reduced row echelon form in place; returns pivot columns.
template <class K>
std::vector<std::size_t> rref(Mat<K>& a) {
    using hodgekit::is_zero;
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < a.cols && prow < a.rows; ++col) {
        std::size_t sel = prow;
        while (sel < a.rows && is_zero(a(sel, col))) ++sel;
        if (sel == a.rows) continue;
        if (sel != prow)
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a(sel, j), a(prow, j));
        const K inv_pivot = Mat<K>::unit() / a(prow, col);
        for (std::size_t j = col; j < a.cols; ++j) a(prow, j) = a(prow, j) * inv_pivot;
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (i == prow || is_zero(a(i, col))) continue;
            const K f = a(i, col);
            for (std::size_t j = col; j < a.cols; ++j) a(i, j) = a(i, j) - f * a(prow, j);
        }
        pivots.push_back(col);
        ++prow;
    }
    return pivots;
}

template <class K>
std::size_t rank_field(Mat<K> a) {
    return rref(a).size();
}

/// Columns form a basis of the null space.
template <class K>
Mat<K> kernel_basis(Mat<K> a) {
    const std::size_t ncols = a.cols;
    auto pivots = rref(a);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < ncols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat<K> ker(ncols, free_cols.size());
    for (std::size_t fc = 0; fc < free_cols.size(); ++fc) {
        ker(free_cols[fc], fc) = Mat<K>::unit();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            ker(pivots[r], fc) = K{} - a(r, free_cols[fc]);
    }
    return ker;
}

template <class K>
Mat<K> inverse(const Mat<K>& m) {
    if (m.rows != m.cols) throw ShapeError("inverse: matrix not square");
    const std::size_t d = m.rows;
    Mat<K> aug(d, 2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) aug(i, j) = m(i, j);
        aug(i, d + i) = Mat<K>::unit();
    }
    auto pivots = rref(aug);
    if (pivots.size() != d || pivots.back() != d - 1)
        throw ValidationError("inverse: singular matrix");
    Mat<K> out(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out(i, j) = aug(i, d + j);
    return out;
}

/// Unique solution of a square nonsingular system.
template <class K>
std::vector<K> solve(const Mat<K>& a, const std::vector<K>& b) {
    if (a.rows != a.cols || b.size() != a.rows) throw ShapeError("solve: bad shapes");
    Mat<K> aug(a.rows, a.cols + 1);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) aug(i, j) = a(i, j);
        aug(i, a.cols) = b[i];
    }
    auto pivots = rref(aug);
    if (pivots.size() != a.rows || (!pivots.empty() && pivots.back() == a.cols))
        throw ValidationError("solve: singular or inconsistent system");
    std::vector<K> x(a.cols, K{});
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols);
    return x;
}

template <class K>
K det(Mat<K> a) {
    using hodgekit::is_zero;
    if (a.rows != a.cols) throw ShapeError("det: matrix not square");
    K d = Mat<K>::unit();
    for (std::size_t col = 0; col < a.cols; ++col) {
        std::size_t sel = col;
        while (sel < a.rows && is_zero(a(sel, col))) ++sel;
        if (sel == a.rows) return K{};
        if (sel != col) {
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a(sel, j), a(col, j));
            d = K{} - d;
        }
        d = d * a(col, col);
        const K inv_pivot = Mat<K>::unit() / a(col, col);
        for (std::size_t i = col + 1; i < a.rows; ++i) {
            if (is_zero(a(i, col))) continue;
            const K f = a(i, col) * inv_pivot;
            for (std::size_t j = col; j < a.cols; ++j) a(i, j) = a(i, j) - f * a(col, j);
        }
    }
    return d;
}

/// Leibniz-expansion determinant for matrices over a commutative ring
/// (no division); fine for the r <= 4 sizes used for minors of form-valued
/// matrices.
template <class Ring>
Ring ring_det(const std::vector<std::vector<Ring>>& m, const Ring& one) {
    const std::size_t r = m.size();
    if (r == 0) return one;
    std::vector<std::size_t> perm(r);
    for (std::size_t i = 0; i < r; ++i) perm[i] = i;
    Ring acc = m[0][perm[0]] - m[0][perm[0]]; // ring zero
    do {
        int inv = 0;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < r; ++j)
                if (perm[i] > perm[j]) ++inv;
        Ring term = one;
        for (std::size_t i = 0; i < r; ++i) term = term * m[i][perm[i]];
        acc = (inv % 2 == 0) ? acc + term : acc - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

} // namespace hodgekit

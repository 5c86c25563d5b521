#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "rlra/core/errors.hpp"

namespace rlra {

// Dense column-major matrix of doubles. Element (i,j) lives at data[i + j*rows].
// Plain value semantics; all algorithms in this library are free functions over it.
class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0)
            throw DimensionError(detail::msg("DenseMatrix: negative dimensions %dx%d", rows, cols));
        data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0.0);
    }

    // Row-major initializer list for small literals in tests and docs:
    //   DenseMatrix a{{1.0, 2.0}, {3.0, 4.0}};
    DenseMatrix(std::initializer_list<std::initializer_list<double>> init) {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ > 0 ? static_cast<int>(init.begin()->size()) : 0;
        data_.assign(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_), 0.0);
        int i = 0;
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols_)
                throw DimensionError("DenseMatrix: ragged initializer list");
            int j = 0;
            for (double v : row) (*this)(i, j++) = v;
            ++i;
        }
    }

    static DenseMatrix identity(int n) {
        DenseMatrix e(n, n);
        for (int i = 0; i < n; ++i) e(i, i) = 1.0;
        return e;
    }

    static DenseMatrix diag(const std::vector<double>& d) {
        const int n = static_cast<int>(d.size());
        DenseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = d[i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) + static_cast<std::size_t>(j) * rows_]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) + static_cast<std::size_t>(j) * rows_]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    // Raw pointer to the start of column j.
    double* col(int j) { return data_.data() + static_cast<std::size_t>(j) * rows_; }
    const double* col(int j) const { return data_.data() + static_cast<std::size_t>(j) * rows_; }

    bool all_finite() const {
        for (double v : data_)
            if (!std::isfinite(v)) return false;
        return true;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

// 0-based index permutation. Validates bijectivity on construction.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> indices) : idx_(std::move(indices)) {
        std::vector<char> seen(idx_.size(), 0);
        for (int v : idx_) {
            if (v < 0 || v >= static_cast<int>(idx_.size()))
                throw DimensionError(detail::msg("Permutation: index %d out of range [0,%zu)", v, idx_.size()));
            if (seen[v])
                throw DimensionError(detail::msg("Permutation: duplicate index %d", v));
            seen[v] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        return Permutation(std::move(v));
    }

    int operator[](int i) const { return idx_[static_cast<std::size_t>(i)]; }
    int size() const { return static_cast<int>(idx_.size()); }
    const std::vector<int>& indices() const { return idx_; }

private:
    std::vector<int> idx_;
};

inline DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix t(a.cols(), a.rows());
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i) t(j, i) = a(i, j);
    return t;
}

// Contiguous block a(r0:r0+nr, c0:c0+nc), half-open on counts.
inline DenseMatrix submatrix(const DenseMatrix& a, int r0, int nr, int c0, int nc) {
    if (r0 < 0 || c0 < 0 || nr < 0 || nc < 0 || r0 + nr > a.rows() || c0 + nc > a.cols())
        throw DimensionError(detail::msg("submatrix: block %d+%d x %d+%d exceeds %dx%d", r0, nr, c0, nc,
                                         a.rows(), a.cols()));
    DenseMatrix b(nr, nc);
    for (int j = 0; j < nc; ++j)
        for (int i = 0; i < nr; ++i) b(i, j) = a(r0 + i, c0 + j);
    return b;
}

// Columns a(:, idx[0..count)) in the given order.
inline DenseMatrix select_columns(const DenseMatrix& a, const Permutation& idx, int count) {
    if (count < 0 || count > idx.size() || count > a.cols())
        throw DimensionError(detail::msg("select_columns: count %d out of range", count));
    DenseMatrix c(a.rows(), count);
    for (int j = 0; j < count; ++j) {
        const double* src = a.col(idx[j]);
        std::copy(src, src + a.rows(), c.col(j));
    }
    return c;
}

// Rows a(idx[0..count), :) in the given order.
inline DenseMatrix select_rows(const DenseMatrix& a, const Permutation& idx, int count) {
    if (count < 0 || count > idx.size() || count > a.rows())
        throw DimensionError(detail::msg("select_rows: count %d out of range", count));
    DenseMatrix r(count, a.cols());
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < count; ++i) r(i, j) = a(idx[i], j);
    return r;
}

// [a b] side by side.
inline DenseMatrix hconcat(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows())
        throw DimensionError(detail::msg("hconcat: row counts disagree (%d vs %d)", a.rows(), b.rows()));
    DenseMatrix c(a.rows(), a.cols() + b.cols());
    for (int j = 0; j < a.cols(); ++j) std::copy(a.col(j), a.col(j) + a.rows(), c.col(j));
    for (int j = 0; j < b.cols(); ++j) std::copy(b.col(j), b.col(j) + b.rows(), c.col(a.cols() + j));
    return c;
}

// [a; b] stacked.
inline DenseMatrix vconcat(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.cols())
        throw DimensionError(detail::msg("vconcat: column counts disagree (%d vs %d)", a.cols(), b.cols()));
    DenseMatrix c(a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        std::copy(a.col(j), a.col(j) + a.rows(), c.col(j));
        std::copy(b.col(j), b.col(j) + b.rows(), c.col(j) + a.rows());
    }
    return c;
}

inline DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(detail::msg("subtract: shapes disagree (%dx%d vs %dx%d)", a.rows(), a.cols(),
                                         b.rows(), b.cols()));
    DenseMatrix c(a.rows(), a.cols());
    const double* pa = a.data();
    const double* pb = b.data();
    double* pc = c.data();
    for (std::size_t i = 0; i < a.size(); ++i) pc[i] = pa[i] - pb[i];
    return c;
}

inline DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(detail::msg("add: shapes disagree (%dx%d vs %dx%d)", a.rows(), a.cols(),
                                         b.rows(), b.cols()));
    DenseMatrix c(a.rows(), a.cols());
    const double* pa = a.data();
    const double* pb = b.data();
    double* pc = c.data();
    for (std::size_t i = 0; i < a.size(); ++i) pc[i] = pa[i] + pb[i];
    return c;
}

inline DenseMatrix scale(const DenseMatrix& a, double s) {
    DenseMatrix c(a.rows(), a.cols());
    const double* pa = a.data();
    double* pc = c.data();
    for (std::size_t i = 0; i < a.size(); ++i) pc[i] = s * pa[i];
    return c;
}

// Scale column j of a by s[j] in place (used to apply diagonal factors).
inline void scale_columns_inplace(DenseMatrix& a, const std::vector<double>& s) {
    if (static_cast<int>(s.size()) != a.cols())
        throw DimensionError(detail::msg("scale_columns_inplace: %zu factors for %d columns", s.size(), a.cols()));
    for (int j = 0; j < a.cols(); ++j) {
        double* c = a.col(j);
        for (int i = 0; i < a.rows(); ++i) c[i] *= s[j];
    }
}

inline double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("max_abs_diff: shapes disagree");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

}  // namespace rlra

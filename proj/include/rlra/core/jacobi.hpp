#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "rlra/core/matrix.hpp"
#include "rlra/core/norms.hpp"

namespace rlra {

struct SymEig {
    std::vector<double> values;  // descending
    DenseMatrix vectors;         // orthonormal columns, vectors(:,i) pairs with values[i]
};

struct SvdFactors {
    DenseMatrix u;              // m x k, orthonormal columns
    std::vector<double> sigma;  // length k, descending, nonnegative
    DenseMatrix v;              // n x k, orthonormal columns
    int k = 0;
};

namespace detail {

inline constexpr int kJacobiSweepCap = 30;
inline constexpr int kOneSidedSweepCap = 60;

// Fills column j of u with a unit vector orthogonal to all columns in `done`,
// chosen from the coordinate directions (used when a singular value is exactly
// zero and no direction survives from the data).
inline void complete_orthonormal_column(DenseMatrix& u, const std::vector<int>& done, int j) {
    const int m = u.rows();
    // Pick the coordinate axis with the smallest presence in the spanned set.
    int best = 0;
    double best_resid = -1.0;
    for (int i = 0; i < m; ++i) {
        double proj2 = 0.0;
        for (int c : done) proj2 += u(i, c) * u(i, c);
        const double resid = 1.0 - proj2;
        if (resid > best_resid) {
            best_resid = resid;
            best = i;
        }
    }
    std::vector<double> r(m, 0.0);
    r[best] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {  // twice-through Gram-Schmidt
        for (int c : done) {
            double dot = 0.0;
            for (int i = 0; i < m; ++i) dot += u(i, c) * r[i];
            for (int i = 0; i < m; ++i) r[i] -= dot * u(i, c);
        }
    }
    double norm = 0.0;
    for (double x : r) norm += x * x;
    norm = std::sqrt(norm);
    for (int i = 0; i < m; ++i) u(i, j) = r[i] / norm;
}

}  // namespace detail

// Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
// Eigenvalues come back in descending order. The input must be symmetric to
// about 1e-12 relative; asymmetry beyond that is rejected rather than averaged
// away silently.
inline SymEig sym_eig(const DenseMatrix& t) {
    const int n = t.rows();
    if (t.cols() != n)
        throw DimensionError(detail::msg("sym_eig: matrix is %dx%d, need square", n, t.cols()));
    const double tnorm = frobenius_norm(t);
    double asym = 0.0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i) asym = std::max(asym, std::abs(t(i, j) - t(j, i)));
    if (tnorm > 0.0 && asym > 1e-12 * tnorm)
        throw NumericalError(detail::msg("sym_eig: asymmetry %.3e exceeds 1e-12 relative to norm %.3e",
                                         asym, tnorm));

    DenseMatrix mtx = t;
    DenseMatrix u = DenseMatrix::identity(n);
    auto offdiag = [&] {
        double sum = 0.0;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < j; ++i) sum += 2.0 * mtx(i, j) * mtx(i, j);
        return std::sqrt(sum);
    };

    int sweep = 0;
    while (n > 1 && offdiag() > 1e-14 * std::max(tnorm, 1e-300)) {
        if (sweep++ >= detail::kJacobiSweepCap)
            throw ConvergenceError(detail::msg(
                "sym_eig: no convergence after %d sweeps; off-diagonal norm %.3e (matrix norm %.3e)",
                detail::kJacobiSweepCap, offdiag(), tnorm));
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = mtx(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                // Symmetric Schur rotation annihilating (p,q).
                const double theta = (mtx(q, q) - mtx(p, p)) / (2.0 * apq);
                const double tt = (theta >= 0.0 ? 1.0 : -1.0) /
                                  (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + tt * tt);
                const double s = tt * c;
                for (int i = 0; i < n; ++i) {
                    const double mip = mtx(i, p);
                    const double miq = mtx(i, q);
                    mtx(i, p) = c * mip - s * miq;
                    mtx(i, q) = s * mip + c * miq;
                }
                for (int i = 0; i < n; ++i) {
                    const double mpi = mtx(p, i);
                    const double mqi = mtx(q, i);
                    mtx(p, i) = c * mpi - s * mqi;
                    mtx(q, i) = s * mpi + c * mqi;
                }
                for (int i = 0; i < n; ++i) {
                    const double uip = u(i, p);
                    const double uiq = u(i, q);
                    u(i, p) = c * uip - s * uiq;
                    u(i, q) = s * uip + c * uiq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return mtx(i, i) > mtx(j, j); });
    SymEig out;
    out.values.resize(n);
    out.vectors = DenseMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        out.values[j] = mtx(order[j], order[j]);
        for (int i = 0; i < n; ++i) out.vectors(i, j) = u(i, order[j]);
    }
    return out;
}

// Full SVD of a small dense matrix by one-sided Jacobi (Hestenes) rotations.
// Any shape is accepted; r = min(m,n) singular values come back descending and
// nonnegative, with orthonormal u (m x r) and v (n x r). Exactly-zero singular
// values get their u columns filled by orthonormal completion.
inline SvdFactors small_svd(const DenseMatrix& a) {
    const int m = a.rows();
    const int n = a.cols();
    if (m < n) {
        SvdFactors flipped = small_svd(transpose(a));
        std::swap(flipped.u, flipped.v);
        return flipped;
    }

    DenseMatrix w = a;
    DenseMatrix v = DenseMatrix::identity(n);
    const double eps = 1e-15;
    int sweep = 0;
    bool rotated = n > 1;
    while (rotated) {
        if (sweep++ >= detail::kOneSidedSweepCap)
            throw ConvergenceError(detail::msg("small_svd: no convergence after %d sweeps on %dx%d input",
                                               detail::kOneSidedSweepCap, m, n));
        rotated = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                const double* wp = w.col(p);
                const double* wq = w.col(q);
                for (int i = 0; i < m; ++i) {
                    app += wp[i] * wp[i];
                    aqq += wq[i] * wq[i];
                    apq += wp[i] * wq[i];
                }
                if (app == 0.0 || aqq == 0.0) continue;
                if (std::abs(apq) <= eps * std::sqrt(app * aqq)) continue;
                // Rotation orthogonalizing columns p and q.
                const double zeta = (aqq - app) / (2.0 * apq);
                const double tt = (zeta >= 0.0 ? 1.0 : -1.0) /
                                  (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + tt * tt);
                const double s = tt * c;
                double* wpm = w.col(p);
                double* wqm = w.col(q);
                for (int i = 0; i < m; ++i) {
                    const double xp = wpm[i];
                    const double xq = wqm[i];
                    wpm[i] = c * xp - s * xq;
                    wqm[i] = s * xp + c * xq;
                }
                for (int i = 0; i < n; ++i) {
                    const double vp = v(i, p);
                    const double vq = v(i, q);
                    v(i, p) = c * vp - s * vq;
                    v(i, q) = s * vp + c * vq;
                }
                rotated = true;
            }
        }
    }

    std::vector<double> sigma(n);
    for (int j = 0; j < n; ++j) sigma[j] = column_norm(w, j);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return sigma[i] > sigma[j]; });

    SvdFactors out;
    out.k = n;
    out.sigma.resize(n);
    out.u = DenseMatrix(m, n);
    out.v = DenseMatrix(n, n);
    std::vector<int> filled;
    filled.reserve(n);
    std::vector<int> needs_completion;
    for (int j = 0; j < n; ++j) {
        const int src = order[j];
        out.sigma[j] = sigma[src];
        for (int i = 0; i < n; ++i) out.v(i, j) = v(i, src);
        if (sigma[src] > 1e-300) {
            for (int i = 0; i < m; ++i) out.u(i, j) = w(i, src) / sigma[src];
            filled.push_back(j);
        } else {
            out.sigma[j] = 0.0;
            needs_completion.push_back(j);
        }
    }
    for (int j : needs_completion) {
        detail::complete_orthonormal_column(out.u, filled, j);
        filled.push_back(j);
    }
    return out;
}

}  // namespace rlra

#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "rlra/core/matmul.hpp"
#include "rlra/core/matrix.hpp"
#include "rlra/core/norms.hpp"

namespace rlra {

struct QrFactors {
    DenseMatrix q;  // m x n, orthonormal columns
    DenseMatrix r;  // n x n, upper triangular, nonnegative diagonal
    // True when some column had numerically zero norm under the reflector; the
    // corresponding Q column is a propagated unit vector and the R entry is 0.
    bool degenerate_rank = false;
};

struct PivotedQr {
    DenseMatrix q1;     // m x frank, orthonormal columns
    DenseMatrix s1;     // frank x n: [S11 S12] in pivot order, S11 upper triangular
    Permutation perm;   // original column index of each permuted position; pivots first
    int frank = 0;      // number of factorization steps taken
    double residual = 0.0;  // Frobenius norm of A(:,perm) - Q1*S1 at the halt point
    bool tolerance_reached = false;  // meaningful in tolerance mode only
    bool degenerate_rank = false;
};

struct TriSolve {
    DenseMatrix t;
    bool clamped = false;  // stabilization clamp was applied
};

namespace detail {

// Column-norm floor below which a Householder step is declared degenerate.
inline constexpr double kReflectorFloor = 1e-300;

// Builds the Householder reflector for w(row0:m, col) in place: stores v in
// v_store (zero above row0), writes the new diagonal entry, zeroes below it,
// and returns beta (0 for a degenerate column).
inline double householder_step(DenseMatrix& w, int row0, int col, DenseMatrix& v_store) {
    const int m = w.rows();
    double norm2 = 0.0;
    for (int i = row0; i < m; ++i) norm2 += w(i, col) * w(i, col);
    const double norm = std::sqrt(norm2);
    for (int i = 0; i < m; ++i) v_store(i, col) = 0.0;
    if (norm < kReflectorFloor) {
        // Numerically zero column: no reflection. The Q column formed later is
        // the identity column propagated through the earlier reflectors, which
        // stays orthonormal to the rest.
        w(row0, col) = 0.0;
        for (int i = row0 + 1; i < m; ++i) w(i, col) = 0.0;
        return 0.0;
    }
    const double x1 = w(row0, col);
    const double alpha = x1 >= 0.0 ? -norm : norm;  // opposite sign avoids cancellation
    for (int i = row0; i < m; ++i) v_store(i, col) = w(i, col);
    v_store(row0, col) -= alpha;
    const double vnorm2 = 2.0 * (norm2 - alpha * x1);
    w(row0, col) = alpha;
    for (int i = row0 + 1; i < m; ++i) w(i, col) = 0.0;
    return 2.0 / vnorm2;
}

// Applies H = I - beta*v*v^T to rows [row0,m) of column j of w.
inline void apply_reflector(DenseMatrix& w, const DenseMatrix& v_store, double beta, int row0,
                            int refl_col, int j) {
    if (beta == 0.0) return;
    const int m = w.rows();
    const double* v = v_store.col(refl_col);
    double* wj = w.col(j);
    double dot = 0.0;
    for (int i = row0; i < m; ++i) dot += v[i] * wj[i];
    const double f = beta * dot;
    for (int i = row0; i < m; ++i) wj[i] -= f * v[i];
}

// Q = H_0 * H_1 * ... * H_{steps-1} * [I_cols; 0], applied in reverse order.
inline DenseMatrix form_q(const DenseMatrix& v_store, const std::vector<double>& betas, int m,
                          int cols) {
    DenseMatrix q(m, cols);
    for (int j = 0; j < cols; ++j) q(j, j) = 1.0;
    for (int k = static_cast<int>(betas.size()) - 1; k >= 0; --k)
        for (int j = 0; j < cols; ++j) apply_reflector(q, v_store, betas[k], k, k, j);
    return q;
}

}  // namespace detail

// Compact Householder QR of a tall or square matrix: a = q*r with q m-by-n
// orthonormal and r n-by-n upper triangular with nonnegative diagonal.
inline QrFactors compact_qr(const DenseMatrix& a) {
    const int m = a.rows();
    const int n = a.cols();
    if (m < n)
        throw DimensionError(detail::msg("compact_qr: matrix is %dx%d, need rows >= cols", m, n));
    DenseMatrix w = a;
    DenseMatrix v_store(m, n);
    std::vector<double> betas(n);
    bool degenerate = false;
    for (int k = 0; k < n; ++k) {
        betas[k] = detail::householder_step(w, k, k, v_store);
        if (betas[k] == 0.0) degenerate = true;
        for (int j = k + 1; j < n; ++j) detail::apply_reflector(w, v_store, betas[k], k, k, j);
    }
    QrFactors f;
    f.q = detail::form_q(v_store, betas, m, n);
    f.r = submatrix(w, 0, n, 0, n);
    f.degenerate_rank = degenerate;
    // Sign convention: flip so every diagonal entry of R is nonnegative.
    for (int k = 0; k < n; ++k) {
        if (f.r(k, k) < 0.0) {
            for (int j = k; j < n; ++j) f.r(k, j) = -f.r(k, j);
            for (int i = 0; i < m; ++i) f.q(i, k) = -f.q(i, k);
        }
    }
    return f;
}

// Orthonormal basis for the range of a tall or square matrix (the Q factor of
// its compact QR). Sets *degenerate when a numerically zero column was hit.
inline DenseMatrix orth(const DenseMatrix& a, bool* degenerate = nullptr) {
    QrFactors f = compact_qr(a);
    if (degenerate) *degenerate = f.degenerate_rank;
    return f.q;
}

// Partial column-pivoted QR (Businger-Golub greedy pivoting).
//
// Exactly one halting mode: k >= 1 runs k factorization steps (tol must be 0),
// or k == 0 with tol > 0 halts at the smallest rank where the Frobenius norm
// of the trailing block drops to tol. Pivot selection uses downdated squared
// column norms, with a column's norm recomputed from scratch whenever its
// downdated value falls below 1e-3 of the value it had when last computed.
// The tolerance test itself is evaluated on the actual trailing block, so the
// reported residual is exact rather than an estimate.
inline PivotedQr pivoted_qr_partial(const DenseMatrix& a, int k, double tol = 0.0) {
    const int m = a.rows();
    const int n = a.cols();
    const int rmax = std::min(m, n);
    const bool tol_mode = k == 0 && tol > 0.0;
    if (!tol_mode && (k < 1 || k > rmax || tol != 0.0))
        throw DimensionError(detail::msg(
            "pivoted_qr_partial: need either k in [1,%d] with tol=0 or k=0 with tol>0 (got k=%d, tol=%g)",
            rmax, k, tol));
    const int kmax = tol_mode ? rmax : k;

    DenseMatrix w = a;
    DenseMatrix v_store(m, kmax);
    std::vector<double> betas;
    betas.reserve(kmax);
    std::vector<int> perm(n);
    std::vector<double> colnorm2(n), refnorm2(n);
    for (int j = 0; j < n; ++j) {
        perm[j] = j;
        colnorm2[j] = detail::sum_squares(w.col(j), static_cast<std::size_t>(m));
        refnorm2[j] = colnorm2[j];
    }

    auto trailing_norm = [&](int f) {
        // Exact Frobenius norm of w(f:m, f:n).
        double sum = 0.0;
        for (int j = f; j < n; ++j) sum += detail::sum_squares(w.col(j) + f, static_cast<std::size_t>(m - f));
        return std::sqrt(sum);
    };

    PivotedQr out;
    bool degenerate = false;
    int frank = 0;
    double residual = tol_mode ? trailing_norm(0) : 0.0;
    bool reached = tol_mode && residual <= tol;

    while (!reached && frank < kmax) {
        const int f = frank;
        // Greedy pivot: trailing column with the largest downdated norm.
        int piv = f;
        for (int j = f + 1; j < n; ++j)
            if (colnorm2[j] > colnorm2[piv]) piv = j;
        if (piv != f) {
            for (int i = 0; i < m; ++i) std::swap(w(i, f), w(i, piv));
            std::swap(perm[f], perm[piv]);
            std::swap(colnorm2[f], colnorm2[piv]);
            std::swap(refnorm2[f], refnorm2[piv]);
        }
        betas.push_back(detail::householder_step(w, f, f, v_store));
        if (betas.back() == 0.0) degenerate = true;
        for (int j = f + 1; j < n; ++j) detail::apply_reflector(w, v_store, betas[f], f, f, j);
        // Downdate the trailing column norms by the newly eliminated row, and
        // recompute any norm that has decayed enough to distrust.
        for (int j = f + 1; j < n; ++j) {
            const double d = w(f, j);
            colnorm2[j] -= d * d;
            if (colnorm2[j] < 1e-6 * refnorm2[j]) {
                colnorm2[j] = detail::sum_squares(w.col(j) + f + 1, static_cast<std::size_t>(m - f - 1));
                refnorm2[j] = colnorm2[j];
            }
        }
        ++frank;
        // The trailing block at full rank is empty and its norm vacuously zero;
        // that case is judged by explicit recomputation after the loop instead.
        if (tol_mode && frank < rmax) {
            residual = trailing_norm(frank);
            if (residual <= tol) reached = true;
        }
    }

    out.q1 = detail::form_q(v_store, betas, m, frank);
    out.s1 = submatrix(w, 0, frank, 0, n);
    for (int kk = 0; kk < frank; ++kk) {
        if (out.s1(kk, kk) < 0.0) {
            for (int j = kk; j < n; ++j) out.s1(kk, j) = -out.s1(kk, j);
            for (int i = 0; i < m; ++i) out.q1(i, kk) = -out.q1(i, kk);
        }
    }
    out.perm = Permutation(std::move(perm));
    out.frank = frank;
    out.degenerate_rank = degenerate;

    if (!tol_mode) {
        out.residual = trailing_norm(frank);
        out.tolerance_reached = false;
    } else if (reached) {
        out.residual = residual;
        out.tolerance_reached = true;
    } else {
        // Ran out of steps. At full rank the trailing block is empty, so measure
        // what was actually achieved against the input itself.
        DenseMatrix ap = select_columns(a, out.perm, n);
        out.residual = frobenius_norm(subtract(ap, matmul(out.q1, out.s1)));
        out.tolerance_reached = out.residual <= tol;
    }
    return out;
}

// T = S11^{-1} * S12 by back substitution, column by column. S11 must be upper
// triangular with no zero diagonal entries. When the diagonal magnitude ratio
// exceeds 1e12 the solve is considered ill-conditioned and every entry of T is
// clamped to magnitude at most 1e4, with the clamp reported in the result.
inline TriSolve upper_tri_solve(const DenseMatrix& s11, const DenseMatrix& s12) {
    const int k = s11.rows();
    if (s11.cols() != k)
        throw DimensionError(detail::msg("upper_tri_solve: S11 is %dx%d, need square", k, s11.cols()));
    if (s12.rows() != k)
        throw DimensionError(detail::msg("upper_tri_solve: S12 has %d rows, need %d", s12.rows(), k));
    double dmax = 0.0;
    double dmin = std::numeric_limits<double>::infinity();
    for (int i = 0; i < k; ++i) {
        const double d = std::abs(s11(i, i));
        if (d == 0.0)
            throw NumericalError(detail::msg("upper_tri_solve: zero diagonal at position %d", i));
        dmax = std::max(dmax, d);
        dmin = std::min(dmin, d);
    }
    TriSolve out;
    out.t = DenseMatrix(k, s12.cols());
    for (int j = 0; j < s12.cols(); ++j) {
        double* tj = out.t.col(j);
        const double* bj = s12.col(j);
        for (int i = k - 1; i >= 0; --i) {
            double sum = bj[i];
            for (int l = i + 1; l < k; ++l) sum -= s11(i, l) * tj[l];
            tj[i] = sum / s11(i, i);
        }
    }
    if (k > 0 && dmax / dmin > 1e12) {
        out.clamped = true;
        double* p = out.t.data();
        for (std::size_t i = 0; i < out.t.size(); ++i)
            if (std::abs(p[i]) > 1e4) p[i] = p[i] > 0.0 ? 1e4 : -1e4;
    }
    return out;
}

}  // namespace rlra

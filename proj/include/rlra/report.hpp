#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "rlra/core/errors.hpp"
#include "rlra/core/jacobi.hpp"
#include "rlra/core/matmul.hpp"
#include "rlra/core/matrix.hpp"
#include "rlra/core/norms.hpp"
#include "rlra/interp.hpp"
#include "rlra/qb.hpp"

namespace rlra {

// ---------------------------------------------------------------------------
// Storage accounting
// ---------------------------------------------------------------------------

enum class FactorizationKind { kSvd, kId, kCur };

// Per-factor nonzero counts, kept as doubles so fractional density
// assumptions evaluate exactly as written.
struct NnzCounts {
    std::vector<std::pair<std::string, double>> parts;
    double total = 0.0;
};

// Counts the stored entries of a rank-k factorization of an m x n matrix.
// `density` models how sparsely the factors copied out of A are stored:
// 1.0 is fully dense; a fraction f counts the skeleton columns/rows (C and R)
// at f times their dense size. Blocks that are dense by construction -- the
// SVD factors, the non-identity part of an interpolation matrix, the CUR
// linkage -- are always counted densely. The identity block embedded in an
// interpolation matrix costs only its k index entries.
inline NnzCounts nnz_report(FactorizationKind kind, int m, int n, int k, double density = 1.0) {
    if (m < 1 || n < 1 || k < 1 || k > std::min(m, n))
        throw DimensionError(detail::msg("nnz_report: invalid shape m=%d n=%d k=%d", m, n, k));
    if (!(density > 0.0) || density > 1.0)
        throw DimensionError(detail::msg("nnz_report: density %g outside (0, 1]", density));
    const double dm = static_cast<double>(m);
    const double dn = static_cast<double>(n);
    const double dk = static_cast<double>(k);
    NnzCounts out;
    switch (kind) {
        case FactorizationKind::kSvd:
            out.parts = {{"U", dk * dm}, {"sigma", dk}, {"V", dk * dn}};
            break;
        case FactorizationKind::kId:
            out.parts = {{"C", density * dk * dm},
                         {"V_interp", dk * (dn - dk)},
                         {"indices", dk}};
            break;
        case FactorizationKind::kCur:
            out.parts = {{"C", density * dk * dm}, {"U", dk * dk}, {"R", density * dk * dn}};
            break;
    }
    for (const auto& p : out.parts) out.total += p.second;
    return out;
}

// ---------------------------------------------------------------------------
// Verification reports
// ---------------------------------------------------------------------------

// Everything a factorization run reports: honest dense reconstruction errors,
// the optimal floors when the true spectrum is known, and storage counts.
// Fields that depend on an unavailable spectrum stay NaN and print as empty
// CSV cells.
struct ErrorReport {
    std::string method;
    int m = 0;
    int n = 0;
    int k = 0;
    std::string params;  // flag echo, ';'-separated so CSV stays one cell

    double rel_frobenius_error = 0.0;
    double rel_spectral_error = 0.0;  // power-iteration estimate

    // Relative optima and a priori bound, available when sigma_true is known:
    // Frobenius floor sqrt(sum_{j>k} sigma_j^2)/||A||_F, spectral floor
    // sigma_{k+1}/sigma_1, and the sketch-based hard bound
    // sqrt(kn) sigma_{k+1}/sigma_1.
    double fro_floor = std::numeric_limits<double>::quiet_NaN();
    double spec_floor = std::numeric_limits<double>::quiet_NaN();
    double spec_bound = std::numeric_limits<double>::quiet_NaN();

    NnzCounts nnz;
    double wall_seconds = 0.0;
};

namespace detail {

inline ErrorReport verify_reconstruction(const DenseMatrix& a, const DenseMatrix& recon,
                                         std::string method, int k,
                                         const std::vector<double>& sigma_true) {
    if (recon.rows() != a.rows() || recon.cols() != a.cols())
        throw DimensionError(msg("verify: reconstruction is %d x %d but the matrix is %d x %d",
                                 recon.rows(), recon.cols(), a.rows(), a.cols()));
    ErrorReport r;
    r.method = std::move(method);
    r.m = a.rows();
    r.n = a.cols();
    r.k = k;

    DenseMatrix diff = subtract(a, recon);
    const double fro_a = frobenius_norm(a);
    const double fro_diff = frobenius_norm(diff);
    const double denom = fro_a > 0.0 ? fro_a : 1.0;
    r.rel_frobenius_error = fro_diff / denom;
    if (fro_diff == 0.0) {
        r.rel_spectral_error = 0.0;
    } else {
        RngState est_rng(0x5bd1e995u);  // fixed: reports must be reproducible
        const double spec_a = spectral_norm_est(a, 60, est_rng);
        const double spec_diff = spectral_norm_est(diff, 60, est_rng);
        r.rel_spectral_error = spec_diff / (spec_a > 0.0 ? spec_a : 1.0);
    }

    if (!sigma_true.empty()) {
        const int rr = static_cast<int>(sigma_true.size());
        double tail2 = 0.0;
        double all2 = 0.0;
        for (int j = 0; j < rr; ++j) {
            all2 += sigma_true[j] * sigma_true[j];
            if (j >= k) tail2 += sigma_true[j] * sigma_true[j];
        }
        const double sig1 = sigma_true[0] > 0.0 ? sigma_true[0] : 1.0;
        const double sig_next = k < rr ? sigma_true[static_cast<std::size_t>(k)] : 0.0;
        r.fro_floor = all2 > 0.0 ? std::sqrt(tail2 / all2) : 0.0;
        r.spec_floor = sig_next / sig1;
        r.spec_bound = std::sqrt(static_cast<double>(k) * a.cols()) * sig_next / sig1;
    }
    return r;
}

}  // namespace detail

inline ErrorReport verify(const DenseMatrix& a, const SvdFactors& f,
                          const std::vector<double>& sigma_true = {}) {
    if (f.u.rows() != a.rows() || f.v.rows() != a.cols() || f.u.cols() != f.k ||
        f.v.cols() != f.k || static_cast<int>(f.sigma.size()) != f.k)
        throw DimensionError("verify: SVD factor shapes do not match the matrix");
    DenseMatrix us = f.u;
    scale_columns_inplace(us, f.sigma);
    ErrorReport r = detail::verify_reconstruction(a, matmul(us, f.v, false, true), "svd", f.k,
                                                  sigma_true);
    if (f.k > 0) r.nnz = nnz_report(FactorizationKind::kSvd, a.rows(), a.cols(), f.k);
    return r;
}

inline ErrorReport verify(const DenseMatrix& a, const IdFactors& f,
                          const std::vector<double>& sigma_true = {}) {
    if (f.v.rows() != a.cols() || f.v.cols() != f.k || f.jc.size() != a.cols())
        throw DimensionError("verify: column-ID factor shapes do not match the matrix");
    DenseMatrix c = select_columns(a, f.jc, f.k);
    ErrorReport r =
        detail::verify_reconstruction(a, matmul(c, f.v, false, true), "id", f.k, sigma_true);
    if (f.k > 0) r.nnz = nnz_report(FactorizationKind::kId, a.rows(), a.cols(), f.k);
    return r;
}

inline ErrorReport verify(const DenseMatrix& a, const RowIdFactors& f,
                          const std::vector<double>& sigma_true = {}) {
    if (f.w.rows() != a.rows() || f.w.cols() != f.k || f.jr.size() != a.rows())
        throw DimensionError("verify: row-ID factor shapes do not match the matrix");
    DenseMatrix rsel = select_rows(a, f.jr, f.k);
    ErrorReport r =
        detail::verify_reconstruction(a, matmul(f.w, rsel), "id-row", f.k, sigma_true);
    // Row variant stores W (m x k, identity rows implicit) plus R's copy.
    if (f.k > 0) r.nnz = nnz_report(FactorizationKind::kId, a.cols(), a.rows(), f.k);
    return r;
}

inline ErrorReport verify(const DenseMatrix& a, const CurFactors& f,
                          const std::vector<double>& sigma_true = {}) {
    if (f.c.rows() != a.rows() || f.r.cols() != a.cols() || f.c.cols() != f.k ||
        f.r.rows() != f.k || f.u.rows() != f.k || f.u.cols() != f.k)
        throw DimensionError("verify: CUR factor shapes do not match the matrix");
    ErrorReport r = detail::verify_reconstruction(a, matmul(f.c, matmul(f.u, f.r)), "cur", f.k,
                                                  sigma_true);
    if (f.k > 0) r.nnz = nnz_report(FactorizationKind::kCur, a.rows(), a.cols(), f.k);
    return r;
}

inline ErrorReport verify(const DenseMatrix& a, const QbFactors& f,
                          const std::vector<double>& sigma_true = {}) {
    if (f.q.rows() != a.rows() || f.b.cols() != a.cols() || f.q.cols() != f.ell ||
        f.b.rows() != f.ell)
        throw DimensionError("verify: QB factor shapes do not match the matrix");
    ErrorReport r =
        detail::verify_reconstruction(a, matmul(f.q, f.b), "qb", f.ell, sigma_true);
    if (f.ell > 0) {
        const double dm = a.rows(), dn = a.cols(), dl = f.ell;
        r.nnz.parts = {{"Q", dl * dm}, {"B", dl * dn}};
        r.nnz.total = dl * (dm + dn);
    }
    return r;
}

// ---------------------------------------------------------------------------
// CSV emission
// ---------------------------------------------------------------------------
// One fixed header; dot-decimal numbers via the C locale; the timing column
// is deliberately last so everything before it is reproducible under a seed.

inline std::string csv_header() {
    return "method,m,n,k,params,rel_fro_error,rel_spec_error,fro_floor,spec_floor,spec_bound,"
           "nnz_total,seconds";
}

namespace detail {

inline std::string csv_num(double v) {
    if (std::isnan(v)) return std::string();
    return msg("%.17g", v);
}

}  // namespace detail

inline std::string csv_row(const ErrorReport& r) {
    std::string row;
    row += r.method;
    row += detail::msg(",%d,%d,%d,", r.m, r.n, r.k);
    row += r.params;
    row += ',';
    row += detail::csv_num(r.rel_frobenius_error);
    row += ',';
    row += detail::csv_num(r.rel_spectral_error);
    row += ',';
    row += detail::csv_num(r.fro_floor);
    row += ',';
    row += detail::csv_num(r.spec_floor);
    row += ',';
    row += detail::csv_num(r.spec_bound);
    row += ',';
    row += detail::csv_num(r.nnz.total);
    row += ',';
    row += detail::msg("%.6f", r.wall_seconds);
    return row;
}

}  // namespace rlra

// Command-line driver for the randomized low-rank approximation toolkit.
//
// Subcommands:
//   gen     write a synthetic test matrix (binary) plus its spectrum sidecar
//   svd     truncated SVD: deterministic dense or randomized (sampled / blocked)
//   id      column interpolative decomposition A ~ C V^T
//   cur     CUR skeleton decomposition A ~ C U R
//   qb      rank-revealing QB factorization A ~ Q B
//   verify  recompute honest errors for previously written factors -> CSV row
//   bench   sweep ranks on one matrix, one CSV row per rank
//
// stdout carries nothing but CSV (header + rows); all prose goes to stderr.
// Every factorize command accepts exactly one of --k / --tol where the
// underlying routine supports both modes.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rlra/rlra.hpp"

namespace {

using rlra::DenseMatrix;
using rlra::RngState;

// Command-line mistakes (contradictory modes, impossible combinations).
// Distinct from rlra::Error so usage problems exit with their own status.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FactorOpts {
    std::string in;
    std::string out_prefix;
    std::string sigma_path;
    std::string method = "rand";
    std::string vnum = "qr";
    int k = 0;
    double tol = 0.0;
    bool relative = false;
    int p = 5;
    int q = 1;
    int s = 1;
    int block = 20;
    int max_blocks = 0;
    int row_blocks = 2;
    std::uint64_t seed = 12345;
};

void add_factor_flags(CLI::App* cmd, FactorOpts& o, bool qb_command) {
    cmd->add_option("--in", o.in, "input matrix file (binary format)")->required();
    cmd->add_option("--out-prefix", o.out_prefix,
                    "write factor files <prefix>.*.bin and <prefix>.meta");
    cmd->add_option("--sigma", o.sigma_path,
                    "spectrum sidecar for oracle floors (default: <in>.sigma if present)");
    cmd->add_option("--k", o.k, "target rank (fixed-rank mode)");
    cmd->add_option("--tol", o.tol, "error tolerance (tolerance mode)");
    cmd->add_flag("--relative", o.relative,
                  "interpret --tol relative to the matrix scale (Frobenius norm; largest "
                  "singular value for deterministic SVD)");
    cmd->add_option("--p", o.p, "oversampling columns beyond k (randomized methods)");
    cmd->add_option("--q", o.q, "power-sampling exponent");
    cmd->add_option("--s", o.s, "orthonormalization period inside the power loop");
    cmd->add_option("--block", o.block, "block width for blocked methods");
    cmd->add_option("--max-blocks", o.max_blocks,
                    "cap on blocks in tolerance mode (default: enough for full rank)");
    if (qb_command) {
        cmd->add_option("--row-blocks", o.row_blocks,
                        "row partitions for --method hier (power of two)");
        cmd->add_option("--method", o.method,
                        "rand | blockrand | parallel | hier (default blockrand)")
            ->check(CLI::IsMember({"rand", "blockrand", "parallel", "hier", "det"}));
        o.method = "blockrand";
    } else {
        cmd->add_option("--method", o.method, "det | rand | blockrand (default rand)")
            ->check(CLI::IsMember({"det", "rand", "blockrand"}));
    }
    cmd->add_option("--vnum", o.vnum, "SVD finishing variant: qr (robust) | bbt (Gram-based)")
        ->check(CLI::IsMember({"qr", "bbt"}));
    cmd->add_option("--seed", o.seed, "random seed (all randomness derives from it)");
}

// ------------------------------------------------------------------ helpers

void require_one_mode(const FactorOpts& o, bool supports_tol) {
    const bool has_k = o.k > 0;
    const bool has_tol = o.tol > 0.0;
    if (has_k && has_tol)
        throw UsageError("give exactly one of --k and --tol, not both");
    if (!has_k && !has_tol)
        throw UsageError(supports_tol ? "give exactly one of --k and --tol"
                                      : "this method needs --k");
    if (has_tol && !supports_tol)
        throw UsageError("method '" + o.method + "' has no tolerance mode here; give --k");
}

double effective_tol(const FactorOpts& o, const DenseMatrix& a) {
    return o.relative ? o.tol * rlra::frobenius_norm(a) : o.tol;
}

int blocks_for_rank(int k, int b) { return (k + b - 1) / b; }

int blocks_for_full_rank(const FactorOpts& o, const DenseMatrix& a, int b) {
    if (o.max_blocks > 0) return o.max_blocks;
    return blocks_for_rank(std::min(a.rows(), a.cols()), b);
}

rlra::Vnum vnum_of(const FactorOpts& o) {
    return o.vnum == "bbt" ? rlra::Vnum::kBbt : rlra::Vnum::kQr;
}

std::string params_echo(const FactorOpts& o) {
    std::string e = "method=" + o.method + ";seed=" + std::to_string(o.seed);
    e += rlra::detail::msg(";p=%d;q=%d;s=%d;block=%d;vnum=%s", o.p, o.q, o.s, o.block,
                           o.vnum.c_str());
    if (o.tol > 0.0) e += rlra::detail::msg(";tol=%.17g;relative=%d", o.tol, o.relative ? 1 : 0);
    if (o.method == "hier") e += rlra::detail::msg(";row-blocks=%d", o.row_blocks);
    if (o.max_blocks > 0) e += rlra::detail::msg(";max-blocks=%d", o.max_blocks);
    return e;
}

std::vector<double> sidecar_spectrum(const FactorOpts& o) {
    std::string path = o.sigma_path;
    if (path.empty()) {
        path = o.in + ".sigma";
        if (!std::ifstream(path).good()) return {};
    }
    return rlra::load_spectrum(path);
}

void warn_if_unreached(const rlra::QbFactors& qb) {
    if (!qb.residual_report.tolerance_reached)
        std::cerr << "warning: tolerance not reached within the rank budget (residual "
                  << qb.residual_report.final_residual << ")\n";
}

// --------------------------------------------------------------- factorizers

rlra::SvdFactors truncate_full_svd(const rlra::SvdFactors& full, double sigma_cut) {
    int keep = full.k;
    for (int i = 0; i < full.k; ++i) {
        if (full.sigma[static_cast<std::size_t>(i)] < sigma_cut) {
            keep = i;
            break;
        }
    }
    rlra::SvdFactors out;
    out.k = keep;
    out.u = rlra::submatrix(full.u, 0, full.u.rows(), 0, keep);
    out.v = rlra::submatrix(full.v, 0, full.v.rows(), 0, keep);
    out.sigma.assign(full.sigma.begin(), full.sigma.begin() + keep);
    return out;
}

rlra::SvdFactors compute_svd(const FactorOpts& o, const DenseMatrix& a, RngState& rng) {
    if (o.method == "det") {
        require_one_mode(o, /*supports_tol=*/true);
        if (o.k > 0) return rlra::svd_truncated(a, o.k);
        if (!o.relative) return rlra::svd_truncated(a, 0, o.tol);
        // Relative deterministic mode: threshold against the computed sigma_1.
        rlra::SvdFactors full = rlra::svd_truncated(a, std::min(a.rows(), a.cols()));
        const double sig1 = full.sigma.empty() ? 0.0 : full.sigma[0];
        return truncate_full_svd(full, o.tol * sig1);
    }
    if (o.method == "rand") {
        require_one_mode(o, /*supports_tol=*/true);
        if (o.k > 0) {
            return o.vnum == "bbt" ? rlra::rsvd_v1(a, o.k, o.p, o.q, o.s, rng)
                                   : rlra::rsvd_v2(a, o.k, o.p, o.q, o.s, rng);
        }
        rlra::QbFactors qb =
            rlra::qb_single(a, effective_tol(o, a), std::min(a.rows(), a.cols()), rng);
        warn_if_unreached(qb);
        return rlra::svd_from_qb(qb, 0, vnum_of(o));
    }
    // blockrand
    require_one_mode(o, /*supports_tol=*/true);
    if (o.k > 0) {
        const int l = o.k + o.p;
        const int b = std::min(o.block, l);
        rlra::QbFactors qb = rlra::qb_blocked(a, b, blocks_for_rank(l, b), 0.0, o.q, o.s, rng);
        return rlra::svd_from_qb(qb, std::min(o.k, qb.ell), vnum_of(o));
    }
    const int b = o.block;
    rlra::QbFactors qb = rlra::qb_blocked(a, b, blocks_for_full_rank(o, a, b),
                                          effective_tol(o, a), o.q, o.s, rng);
    warn_if_unreached(qb);
    return rlra::svd_from_qb(qb, 0, vnum_of(o));
}

rlra::IdFactors empty_id(const DenseMatrix& a) {
    rlra::IdFactors f;
    f.jc = rlra::Permutation::identity(a.cols());
    f.v = DenseMatrix(a.cols(), 0);
    f.k = 0;
    f.qr_residual = rlra::frobenius_norm(a);
    return f;
}

// Tolerance-mode rank choice on top of a QB pass: rank-reveal B itself, then
// drop the oversampling margin so the kept rank mirrors the fixed-rank path.
int qb_tolerance_rank(const rlra::QbFactors& qb, double tol, int p) {
    const int frank_b = rlra::id_column(qb.b, 0, tol).k;
    return std::max(1, frank_b - p);
}

rlra::IdFactors compute_id(const FactorOpts& o, const DenseMatrix& a, RngState& rng) {
    if (o.method == "det") {
        require_one_mode(o, /*supports_tol=*/true);
        if (o.k > 0) return rlra::id_column(a, o.k);
        return rlra::id_column(a, 0, effective_tol(o, a));
    }
    if (o.method == "rand") {
        require_one_mode(o, /*supports_tol=*/false);
        return rlra::id_rand(a, o.k, o.p, o.q, o.s, rng);
    }
    // blockrand
    require_one_mode(o, /*supports_tol=*/true);
    if (o.k > 0) {
        const int l = o.k + o.p;
        const int b = std::min(o.block, l);
        rlra::QbFactors qb = rlra::qb_blocked(a, b, blocks_for_rank(l, b), 0.0, o.q, o.s, rng);
        return rlra::id_from_qb(qb, a, o.k);
    }
    const double tol = effective_tol(o, a);
    rlra::QbFactors qb =
        rlra::qb_blocked(a, o.block, blocks_for_full_rank(o, a, o.block), tol, o.q, o.s, rng);
    warn_if_unreached(qb);
    if (qb.ell == 0) return empty_id(a);
    return rlra::id_from_qb(qb, a, qb_tolerance_rank(qb, tol, o.p));
}

rlra::CurFactors compute_cur(const FactorOpts& o, const DenseMatrix& a, RngState& rng) {
    if (o.method == "det") {
        require_one_mode(o, /*supports_tol=*/true);
        if (o.k > 0) return rlra::cur(a, o.k);
        return rlra::cur(a, 0, effective_tol(o, a));
    }
    if (o.method == "rand") {
        require_one_mode(o, /*supports_tol=*/false);
        return rlra::cur_rand(a, o.k, o.p, o.q, o.s, rng);
    }
    // blockrand: column skeleton from the QB pass, then the deterministic
    // row side and linkage solve on the selected columns.
    rlra::IdFactors col = compute_id(o, a, rng);
    return rlra::detail::cur_from_two_sided(
        a, rlra::detail::two_sided_from_column(a, std::move(col)));
}

rlra::QbFactors compute_qb(const FactorOpts& o, const DenseMatrix& a, RngState& rng) {
    if (o.method == "det")
        throw UsageError("QB is inherently randomized; pick rand, blockrand, parallel, or hier");
    if (o.method == "rand") {
        require_one_mode(o, /*supports_tol=*/true);
        if (o.k > 0)
            return rlra::qb_single(a, std::numeric_limits<double>::min(), o.k, rng);
        rlra::QbFactors qb =
            rlra::qb_single(a, effective_tol(o, a), std::min(a.rows(), a.cols()), rng);
        warn_if_unreached(qb);
        return qb;
    }
    if (o.method == "blockrand") {
        require_one_mode(o, /*supports_tol=*/true);
        if (o.k > 0) {
            const int b = std::min(o.block, o.k);
            return rlra::qb_blocked(a, b, blocks_for_rank(o.k, b), 0.0, o.q, o.s, rng);
        }
        rlra::QbFactors qb =
            rlra::qb_blocked(a, o.block, blocks_for_full_rank(o, a, o.block),
                             effective_tol(o, a), o.q, o.s, rng);
        warn_if_unreached(qb);
        return qb;
    }
    require_one_mode(o, /*supports_tol=*/false);  // parallel and hier are fixed-budget
    const int b = std::min(o.block, o.k);
    const int blocks = blocks_for_rank(o.k, b);
    if (o.method == "parallel") return rlra::qb_parallel(a, b, blocks, o.q, rng);
    return rlra::qb_hierarchical(a, o.row_blocks, b, blocks, o.q, rng);
}

// ------------------------------------------------------------- factor files

void write_meta(const std::string& prefix, const std::string& kind, int k, const DenseMatrix& a,
                const std::string& params) {
    std::ofstream os(prefix + ".meta", std::ios::trunc);
    if (!os) throw rlra::IoError("cannot open '" + prefix + ".meta' for writing");
    os << "kind=" << kind << "\n"
       << "k=" << k << "\n"
       << "m=" << a.rows() << "\n"
       << "n=" << a.cols() << "\n"
       << "params=" << params << "\n";
}

void write_indices(const std::string& path, const rlra::Permutation& perm) {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw rlra::IoError("cannot open '" + path + "' for writing");
    for (int i = 0; i < perm.size(); ++i) os << perm[i] << "\n";
}

rlra::Permutation read_indices(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw rlra::IoError("cannot open '" + path + "'");
    std::vector<int> idx;
    int v = 0;
    while (is >> v) idx.push_back(v);
    return rlra::Permutation(std::move(idx));
}

void write_factors(const std::string& prefix, const rlra::SvdFactors& f, const DenseMatrix& a,
                   const std::string& params) {
    rlra::save_binary(prefix + ".u.bin", f.u);
    rlra::save_spectrum(prefix + ".sigma.txt", f.sigma);
    rlra::save_binary(prefix + ".v.bin", f.v);
    write_meta(prefix, "svd", f.k, a, params);
}

void write_factors(const std::string& prefix, const rlra::IdFactors& f, const DenseMatrix& a,
                   const std::string& params) {
    rlra::save_binary(prefix + ".c.bin", rlra::select_columns(a, f.jc, f.k));
    rlra::save_binary(prefix + ".v.bin", f.v);
    write_indices(prefix + ".jc.txt", f.jc);
    write_meta(prefix, "id", f.k, a, params);
}

void write_factors(const std::string& prefix, const rlra::CurFactors& f, const DenseMatrix& a,
                   const std::string& params) {
    rlra::save_binary(prefix + ".c.bin", f.c);
    rlra::save_binary(prefix + ".u.bin", f.u);
    rlra::save_binary(prefix + ".r.bin", f.r);
    write_indices(prefix + ".jc.txt", f.jc);
    write_indices(prefix + ".jr.txt", f.jr);
    write_meta(prefix, "cur", f.k, a, params);
}

void write_factors(const std::string& prefix, const rlra::QbFactors& f, const DenseMatrix& a,
                   const std::string& params) {
    rlra::save_binary(prefix + ".q.bin", f.q);
    rlra::save_binary(prefix + ".b.bin", f.b);
    write_meta(prefix, "qb", f.ell, a, params);
}

std::map<std::string, std::string> read_meta(const std::string& prefix) {
    std::ifstream is(prefix + ".meta");
    if (!is) throw rlra::IoError("cannot open '" + prefix + ".meta'");
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(is, line)) {
        const std::size_t eq = line.find('=');
        if (eq != std::string::npos) kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

// ------------------------------------------------------------- subcommands

void emit(const rlra::ErrorReport& r) {
    std::cout << rlra::csv_header() << "\n" << rlra::csv_row(r) << "\n";
}

int run_gen(int m, int n, const std::string& type, std::uint64_t seed, const std::string& out) {
    rlra::SpectrumSpec spec;
    if (type == "I")
        spec = rlra::SpectrumSpec::type_i();
    else if (type == "II")
        spec = rlra::SpectrumSpec::type_ii();
    else if (type == "III")
        spec = rlra::SpectrumSpec::type_iii();
    else
        throw UsageError("--type must be I, II, or III");
    RngState rng(seed);
    rlra::TestMatrix tm = rlra::gen_test_matrix(m, n, spec, rng);
    rlra::save_binary(out, tm.a);
    rlra::save_spectrum(out + ".sigma", tm.sigma_true);
    std::cerr << "wrote " << out << " (" << m << " x " << n << ", type " << type << ") and "
              << out << ".sigma\n";
    return 0;
}

template <typename Compute>
int run_factor(const FactorOpts& o, const char* fallback_method, Compute&& compute) {
    DenseMatrix a = rlra::load_binary(o.in);
    std::vector<double> sigma = sidecar_spectrum(o);
    RngState rng(o.seed);
    const auto t0 = std::chrono::steady_clock::now();
    auto factors = compute(o, a, rng);
    const auto t1 = std::chrono::steady_clock::now();
    rlra::ErrorReport r = rlra::verify(a, factors, sigma);
    r.method = fallback_method;
    r.params = params_echo(o);
    r.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    if (!o.out_prefix.empty()) write_factors(o.out_prefix, factors, a, r.params);
    emit(r);
    return 0;
}

int run_verify(const std::string& in, const std::string& prefix, const std::string& sigma_path) {
    DenseMatrix a = rlra::load_binary(in);
    FactorOpts so;
    so.in = in;
    so.sigma_path = sigma_path;
    std::vector<double> sigma = sidecar_spectrum(so);
    std::map<std::string, std::string> meta = read_meta(prefix);
    const std::string kind = meta.count("kind") ? meta["kind"] : "";
    const int k = meta.count("k") ? std::atoi(meta["k"].c_str()) : 0;

    const auto t0 = std::chrono::steady_clock::now();
    rlra::ErrorReport r;
    if (kind == "svd") {
        rlra::SvdFactors f;
        f.u = rlra::load_binary(prefix + ".u.bin");
        f.sigma = rlra::load_spectrum(prefix + ".sigma.txt");
        f.v = rlra::load_binary(prefix + ".v.bin");
        f.k = k;
        r = rlra::verify(a, f, sigma);
    } else if (kind == "id") {
        rlra::IdFactors f;
        f.v = rlra::load_binary(prefix + ".v.bin");
        f.jc = read_indices(prefix + ".jc.txt");
        f.k = k;
        r = rlra::verify(a, f, sigma);
    } else if (kind == "cur") {
        rlra::CurFactors f;
        f.c = rlra::load_binary(prefix + ".c.bin");
        f.u = rlra::load_binary(prefix + ".u.bin");
        f.r = rlra::load_binary(prefix + ".r.bin");
        f.k = k;
        r = rlra::verify(a, f, sigma);
    } else if (kind == "qb") {
        rlra::QbFactors f;
        f.q = rlra::load_binary(prefix + ".q.bin");
        f.b = rlra::load_binary(prefix + ".b.bin");
        f.ell = k;
        r = rlra::verify(a, f, sigma);
    } else {
        throw rlra::IoError("'" + prefix + ".meta' has unknown kind '" + kind + "'");
    }
    const auto t1 = std::chrono::steady_clock::now();
    if (meta.count("params")) r.params = meta["params"];
    r.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    emit(r);
    return 0;
}

int run_bench(FactorOpts o, const std::string& algo, const std::vector<int>& ks) {
    if (ks.empty()) throw UsageError("--ks needs at least one rank");
    DenseMatrix a = rlra::load_binary(o.in);
    std::vector<double> sigma = sidecar_spectrum(o);
    std::cout << rlra::csv_header() << "\n";
    for (int k : ks) {
        o.k = k;
        o.tol = 0.0;
        RngState rng(o.seed);
        const auto t0 = std::chrono::steady_clock::now();
        rlra::ErrorReport r;
        if (algo == "svd") {
            rlra::SvdFactors f = compute_svd(o, a, rng);
            r = rlra::verify(a, f, sigma);
        } else if (algo == "id") {
            rlra::IdFactors f = compute_id(o, a, rng);
            r = rlra::verify(a, f, sigma);
        } else if (algo == "cur") {
            rlra::CurFactors f = compute_cur(o, a, rng);
            r = rlra::verify(a, f, sigma);
        } else {
            throw UsageError("--algo must be svd, id, or cur");
        }
        const auto t1 = std::chrono::steady_clock::now();
        r.method = algo;
        r.params = params_echo(o);
        r.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
        std::cout << rlra::csv_row(r) << "\n";
    }
    return 0;
}

void apply_thread_settings(int flag_threads) {
    int n = flag_threads;
    if (const char* env = std::getenv("RLRA_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) n = static_cast<int>(v);
    }
    if (n > 0) rlra::config::set_threads(n);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"randomized low-rank matrix factorizations: SVD, ID, CUR, QB"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads,
                   "worker threads for dense kernels (RLRA_THREADS overrides)");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a synthetic matrix with a known spectrum");
    int gm = 100, gn = 100;
    std::string gtype = "II", gout;
    std::uint64_t gseed = 1;
    gen->add_option("--m", gm, "rows")->required();
    gen->add_option("--n", gn, "columns")->required();
    gen->add_option("--type", gtype, "spectrum decay: I | II | III");
    gen->add_option("--seed", gseed, "random seed");
    gen->add_option("--out", gout, "output matrix path")->required();

    FactorOpts svd_o, id_o, cur_o, qb_o;
    auto* svd = app.add_subcommand("svd", "truncated singular value decomposition");
    add_factor_flags(svd, svd_o, false);
    auto* id = app.add_subcommand("id", "column interpolative decomposition");
    add_factor_flags(id, id_o, false);
    auto* cur = app.add_subcommand("cur", "CUR skeleton decomposition");
    add_factor_flags(cur, cur_o, false);
    auto* qb = app.add_subcommand("qb", "QB range-capture factorization");
    add_factor_flags(qb, qb_o, true);

    auto* ver = app.add_subcommand("verify", "recompute errors for stored factors");
    std::string vin, vprefix, vsigma;
    ver->add_option("--in", vin, "matrix the factors approximate")->required();
    ver->add_option("--prefix", vprefix, "factor file prefix written by a factorize command")
        ->required();
    ver->add_option("--sigma", vsigma, "spectrum sidecar (default: <in>.sigma if present)");

    auto* bench = app.add_subcommand("bench", "error/storage sweep over ranks");
    FactorOpts bench_o;
    std::string balgo = "svd";
    std::vector<int> bks;
    bench->add_option("--in", bench_o.in, "input matrix file")->required();
    bench->add_option("--ks", bks, "comma-separated rank list, e.g. 5,10,20")
        ->required()
        ->delimiter(',');
    bench->add_option("--algo", balgo, "svd | id | cur")
        ->check(CLI::IsMember({"svd", "id", "cur"}));
    bench->add_option("--method", bench_o.method, "det | rand | blockrand")
        ->check(CLI::IsMember({"det", "rand", "blockrand"}));
    bench->add_option("--sigma", bench_o.sigma_path, "spectrum sidecar for oracle columns");
    bench->add_option("--p", bench_o.p, "oversampling");
    bench->add_option("--q", bench_o.q, "power-sampling exponent");
    bench->add_option("--s", bench_o.s, "orthonormalization period");
    bench->add_option("--block", bench_o.block, "block width for blockrand");
    bench->add_option("--vnum", bench_o.vnum, "qr | bbt")
        ->check(CLI::IsMember({"qr", "bbt"}));
    bench->add_option("--seed", bench_o.seed, "random seed (reused for every k)");

    CLI11_PARSE(app, argc, argv);
    apply_thread_settings(threads);

    try {
        if (gen->parsed()) return run_gen(gm, gn, gtype, gseed, gout);
        if (svd->parsed()) return run_factor(svd_o, "svd", compute_svd);
        if (id->parsed()) return run_factor(id_o, "id", compute_id);
        if (cur->parsed()) return run_factor(cur_o, "cur", compute_cur);
        if (qb->parsed()) return run_factor(qb_o, "qb", compute_qb);
        if (ver->parsed()) return run_verify(vin, vprefix, vsigma);
        if (bench->parsed()) return run_bench(bench_o, balgo, bks);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const rlra::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

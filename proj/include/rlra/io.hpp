#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "rlra/core/errors.hpp"
#include "rlra/core/matrix.hpp"

namespace rlra {

namespace detail {

inline void put_i32_le(std::ostream& os, std::int32_t value) {
    const auto u = static_cast<std::uint32_t>(value);
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((u >> (8 * i)) & 0xffu);
    os.write(b, 4);
}

inline void put_f64_le(std::ostream& os, double value) {
    const auto u = std::bit_cast<std::uint64_t>(value);
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((u >> (8 * i)) & 0xffu);
    os.write(b, 8);
}

inline std::int32_t get_i32_le(const unsigned char* p) {
    std::uint32_t u = 0;
    for (int i = 0; i < 4; ++i) u |= static_cast<std::uint32_t>(p[i]) << (8 * i);
    return static_cast<std::int32_t>(u);
}

inline double get_f64_le(const unsigned char* p) {
    std::uint64_t u = 0;
    for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return std::bit_cast<double>(u);
}

}  // namespace detail

// Binary matrix format: two 32-bit signed little-endian integers (rows, cols)
// followed by rows*cols little-endian IEEE-754 doubles listed in the order of
// a double loop over the rows and then the columns. Zero entries are written
// like any other value; a file is always exactly 8 + 8*rows*cols bytes.
inline void save_binary(const std::string& path, const DenseMatrix& a) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError(detail::msg("save_binary: cannot open '%s' for writing", path.c_str()));
    detail::put_i32_le(os, a.rows());
    detail::put_i32_le(os, a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) detail::put_f64_le(os, a(i, j));
    os.flush();
    if (!os) throw IoError(detail::msg("save_binary: write to '%s' failed", path.c_str()));
}

inline DenseMatrix load_binary(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError(detail::msg("load_binary: cannot open '%s'", path.c_str()));
    is.seekg(0, std::ios::end);
    const long long size = static_cast<long long>(is.tellg());
    is.seekg(0, std::ios::beg);
    if (size < 8)
        throw IoError(detail::msg(
            "load_binary: '%s' truncated at byte offset %lld: need 8 header bytes",
            path.c_str(), size));

    unsigned char header[8];
    is.read(reinterpret_cast<char*>(header), 8);
    const std::int32_t rows = detail::get_i32_le(header);
    const std::int32_t cols = detail::get_i32_le(header + 4);
    if (rows <= 0 || cols <= 0)
        throw IoError(detail::msg(
            "load_binary: '%s' has invalid dimensions %d x %d in header at byte offset 0",
            path.c_str(), rows, cols));

    const long long expected = 8LL + 8LL * rows * cols;
    if (size < expected)
        throw IoError(detail::msg(
            "load_binary: '%s' truncated at byte offset %lld: %d x %d payload needs %lld bytes",
            path.c_str(), size, rows, cols, expected));
    if (size > expected)
        throw IoError(detail::msg(
            "load_binary: '%s' is %lld bytes but a %d x %d matrix occupies exactly %lld",
            path.c_str(), size, rows, cols, expected));

    DenseMatrix a(rows, cols);
    std::vector<unsigned char> buf(static_cast<std::size_t>(8) * cols);
    for (int i = 0; i < rows; ++i) {
        is.read(reinterpret_cast<char*>(buf.data()), 8LL * cols);
        if (!is)
            throw IoError(detail::msg("load_binary: read from '%s' failed at byte offset %lld",
                                      path.c_str(), 8LL + 8LL * i * cols));
        for (int j = 0; j < cols; ++j) {
            const double v = detail::get_f64_le(buf.data() + 8 * static_cast<std::size_t>(j));
            if (!std::isfinite(v))
                throw IoError(detail::msg(
                    "load_binary: '%s' holds a non-finite value at byte offset %lld (row %d, "
                    "column %d)",
                    path.c_str(), 8LL + 8LL * (static_cast<long long>(i) * cols + j), i, j));
            a(i, j) = v;
        }
    }
    return a;
}

// Spectrum sidecar: plain text, one singular value per line, full precision.
// Generated matrices carry one so that verification can evaluate oracle
// floors without a dense SVD of the stored matrix.
inline void save_spectrum(const std::string& path, const std::vector<double>& sigma) {
    std::ofstream os(path, std::ios::trunc);
    if (!os)
        throw IoError(detail::msg("save_spectrum: cannot open '%s' for writing", path.c_str()));
    for (double s : sigma) os << detail::msg("%.17g\n", s);
    os.flush();
    if (!os) throw IoError(detail::msg("save_spectrum: write to '%s' failed", path.c_str()));
}

inline std::vector<double> load_spectrum(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError(detail::msg("load_spectrum: cannot open '%s'", path.c_str()));
    std::vector<double> sigma;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        // strtod (not stod): subnormal values parse with ERANGE yet are valid.
        const char* begin = line.c_str();
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin)
            throw IoError(
                detail::msg("load_spectrum: '%s' line %d is not a number", path.c_str(), lineno));
        std::size_t pos = static_cast<std::size_t>(end - begin);
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\r')) ++pos;
        if (pos != line.size() || !std::isfinite(v))
            throw IoError(detail::msg("load_spectrum: '%s' line %d is not a finite number",
                                      path.c_str(), lineno));
        sigma.push_back(v);
    }
    return sigma;
}

}  // namespace rlra

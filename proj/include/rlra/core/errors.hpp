#pragma once

#include <cstdarg>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace rlra {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Shape mismatches and out-of-range structural arguments.
struct DimensionError : Error {
    using Error::Error;
};

// Numerical guard trips: rank deficiency, zero pivots, tolerance floors.
struct NumericalError : Error {
    using Error::Error;
};

// Iterative kernels that hit their sweep/iteration cap.
struct ConvergenceError : Error {
    using Error::Error;
};

// File format and filesystem failures.
struct IoError : Error {
    using Error::Error;
};

namespace detail {

// printf-style message formatting (libstdc++ 11 has no std::format).
inline std::string msg(const char* fmt, ...) {
    va_list args;
    va_start(args, fmt);
    char buf[512];
    std::vsnprintf(buf, sizeof(buf), fmt, args);
    va_end(args);
    return std::string(buf);
}

}  // namespace detail
}  // namespace rlra

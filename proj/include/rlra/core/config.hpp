#pragma once

#include <algorithm>
#include <atomic>

namespace rlra::config {

// Process-wide worker thread count for the parallel kernels. Defaults to 1
// (serial). Parallel execution never changes results: work is split so that
// every output element keeps its serial reduction order.
inline std::atomic<int>& thread_count_ref() {
    static std::atomic<int> n{1};
    return n;
}

inline void set_threads(int n) { thread_count_ref().store(std::max(1, n)); }

inline int threads() { return thread_count_ref().load(); }

}  // namespace rlra::config

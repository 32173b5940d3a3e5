#pragma once

#include <numeric>
#include <span>

// Internal span-level shape checks shared by classify and the counters.
// All spans are non-increasing part lists.

namespace sptk::detail {

inline long long span_weight(std::span<const int> p) {
    return std::accumulate(p.begin(), p.end(), 0LL);
}

// Non-increasing + pairwise distinct == strictly decreasing.
inline bool strictly_decreasing(std::span<const int> p) {
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] >= p[i - 1])
            return false;
    return true;
}

inline bool all_parity(std::span<const int> p, int parity) {
    for (int v : p)
        if ((v & 1) != parity)
            return false;
    return true;
}

}  // namespace sptk::detail

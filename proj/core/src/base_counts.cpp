#include "sptk/base_counts.hpp"

#include <stdexcept>

namespace sptk {

namespace {

// Walks partitions of `n` into strictly increasing parts >= `lo`, parts
// restricted to `parity` (0 even, 1 odd, -1 any). Each completed partition
// contributes sign^length, so sign = -1 yields the signed count.
long long walk_distinct(long long n, long long lo, int parity, int sign) {
    if (n == 0)
        return 1;
    long long total = 0;
    long long a = lo;
    if (parity >= 0 && (a & 1LL) != parity)
        ++a;
    const long long step = parity >= 0 ? 2 : 1;
    for (; a <= n; a += step)
        total += sign * walk_distinct(n - a, a + 1, parity, sign);
    return total;
}

}  // namespace

long long count_base(BaseKind kind, long long n) {
    if (n < 0)
        throw std::invalid_argument("count_base: n must be >= 0");
    switch (kind) {
    case BaseKind::PD:
        return walk_distinct(n, 1, -1, 1);
    case BaseKind::PDE:
        return walk_distinct(n, 2, 0, 1);
    case BaseKind::PDO:
        return walk_distinct(n, 1, 1, 1);
    case BaseKind::PDO_SIGNED:
        return walk_distinct(n, 1, 1, -1);
    }
    throw std::invalid_argument("count_base: bad kind");
}

const char* to_string(BaseKind kind) {
    switch (kind) {
    case BaseKind::PD:
        return "PD";
    case BaseKind::PDE:
        return "PDE";
    case BaseKind::PDO:
        return "PDO";
    case BaseKind::PDO_SIGNED:
        return "PDO_SIGNED";
    }
    return "?";
}

}  // namespace sptk

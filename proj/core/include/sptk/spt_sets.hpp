#pragma once

#include <vector>

#include "sptk/class_tag.hpp"
#include "sptk/partition.hpp"

namespace sptk {

/* Family D: smallest part occurs exactly k times, remaining parts distinct.
 * Family DO: additionally the remaining parts have parity opposite to the
 * smallest part. */
enum class SptFamily { D, DO };

struct SptQuery {
    SptFamily family;
    int k;        // >= 1
    long long n;  // >= 1
};

/* Class count split by the parity of the number of parts above the
 * smallest: total = even_t + odd_t, signed_count = even_t - odd_t. */
struct CountBundle {
    long long total = 0;
    long long even_t = 0;
    long long odd_t = 0;
    long long signed_count = 0;
};

/* Enumeration caps that keep every call desk-scale. Exceeding a cap is an
 * error, never a silent truncation. */
struct Limits {
    int k_max = 8;
    long long n_max = 60;
};

// True iff p is a member of the queried class. Throws on weight mismatch.
bool is_member(const Partition& p, const SptQuery& q);

// Exact count by filtered exhaustive enumeration of the partitions of n.
// n < k yields an all-zero bundle.
CountBundle count(const SptQuery& q, const Limits& limits = {});

// One enumeration pass over the partitions of n, producing the bundle for
// every smallest-part multiplicity k = 1..n (index k; index 0 unused).
std::vector<CountBundle> count_by_multiplicity(SptFamily family, long long n,
                                               const Limits& limits = {});

const char* to_string(SptFamily family);

}  // namespace sptk

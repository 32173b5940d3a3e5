#pragma once

#include <optional>
#include <span>
#include <string>

#include "sptk/partition.hpp"

namespace sptk {

/* Names the partition classes that the maps and counters act on.
 *   SPTKD(k, n)   smallest part occurs exactly k times, remaining parts distinct
 *   SPTKDO(k, n)  as SPTKD, remaining parts also of parity opposite to the smallest
 *   B0(k, n)      SPTKDO members with an even number of parts above the smallest
 *   B1(k, n)      SPTKDO members with an odd number of parts above the smallest
 *   PD(n)         all parts distinct
 *   PDE(n)        all parts distinct and even
 *   PDO(n)        all parts distinct and odd
 * PD/PDE/PDO carry no k and contain the empty partition at weight 0. */
enum class ClassKind { SPTKD, SPTKDO, B0, B1, PD, PDE, PDO };

struct ClassTag {
    ClassKind kind;
    std::optional<int> k;  // present exactly for SPTKD/SPTKDO/B0/B1
    long long weight;

    static ClassTag spt_d(int k, long long n);
    static ClassTag spt_do(int k, long long n);
    static ClassTag b0(int k, long long n);
    static ClassTag b1(int k, long long n);
    static ClassTag pd(long long n);
    static ClassTag pde(long long n);
    static ClassTag pdo(long long n);

    friend bool operator==(const ClassTag&, const ClassTag&) = default;
};

std::string to_string(const ClassTag& tag);  // "B1(2, 6)", "PDE(4)"

// Membership test: weight must match and the class predicate must hold.
bool classify(std::span<const int> sorted_desc, const ClassTag& tag);
bool classify(const Partition& p, const ClassTag& tag);

}  // namespace sptk

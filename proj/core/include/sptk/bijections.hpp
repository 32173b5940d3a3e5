#pragma once

#include <string>
#include <vector>

#include "sptk/class_tag.hpp"
#include "sptk/partition.hpp"

namespace sptk {

/* The five weight-shifting maps, each a bijection between a two-component
 * domain and its image classes:
 *
 *   THM1A (k >= 2):  SPTKD(k, n) u SPTKD(k-1, n)
 *                      -> SPTKD(k-1, n-k+1) u PD(n-k+1)
 *   L1 (k >= 1, t):  B0(k+1, 2t+1) u B1(k, 2t)
 *                      -> B1(k, 2t-2k)   u PDE(2t-k)
 *   L2 (k >= 1, t):  B0(k+1, 2t)   u B1(k, 2t-1)
 *                      -> B1(k, 2t-2k-1) u PDE(2t-k-1) u PDO(2t-2k-1)
 *   L3 (k >= 1, t):  B0(k, 2t-1)   u B1(k+1, 2t)
 *                      -> B0(k, 2t-2k-1) u PDE(2t-k-1)
 *   L4 (k >= 1, t):  B0(k, 2t)     u B1(k+1, 2t+1)
 *                      -> B0(k, 2t-2k)   u PDE(2t-k)   u PDO(2t-2k)
 *
 * Forward maps edit copies of the smallest part downward (by 1 or 2);
 * inverses restore them or adjoin new smallest parts. */
enum class RuleId { THM1A, L1, L2, L3, L4 };

struct BijectionRule {
    RuleId id;
    int k;
};

/* Image partition together with the class it is claimed to land in; the
 * constructor rejects pairs where classify fails. */
struct MappedPartition {
    Partition image;
    ClassTag tag;

    MappedPartition(Partition image, ClassTag tag);
};

// Applies the rule's forward map. The domain component is inferred from
// the partition (the two components never overlap). Throws
// std::domain_error naming the violated membership predicate when lam is
// outside the declared domain union.
MappedPartition forward(const BijectionRule& rule, const Partition& lam);

// Applies the rule's inverse map. The tag picks the codomain component
// explicitly, since distinct components may coincide as raw partitions.
// Throws std::domain_error on tag/partition mismatch or a tag outside the
// rule's codomain.
Partition inverse(const BijectionRule& rule, const Partition& mu, const ClassTag& mu_tag);

/* Exhaustive verification record for one (rule, k, cell). Failures are
 * data, not errors. */
struct BijectionReport {
    BijectionRule rule;
    // THM1A: the domain weight n. L1..L4: the parameter t (component
    // weights 2t-1 .. 2t+1 as listed above).
    long long n = 0;
    long long domain_size = 0;
    long long codomain_size = 0;
    std::vector<Partition> roundtrip_failures;
    std::vector<Partition> codomain_violations;
    long long elapsed_ms = 0;

    bool passed() const {
        return domain_size == codomain_size && roundtrip_failures.empty() &&
               codomain_violations.empty();
    }
};

// Enumerates the full domain and codomain unions of (rule, cell), checks
// inverse(forward(p)) == p, forward(inverse(q)) == q, the claimed image
// classes, and the cardinality match.
BijectionReport verify_rule(const BijectionRule& rule, long long cell);

// Members of the class named by tag, in decreasing lexicographic order.
// Negative weight yields the empty set.
std::vector<Partition> enumerate_class(const ClassTag& tag);

// Domain/codomain component tags of (rule, cell), in a fixed order.
std::vector<ClassTag> domain_components(const BijectionRule& rule, long long cell);
std::vector<ClassTag> codomain_components(const BijectionRule& rule, long long cell);

const char* to_string(RuleId id);

}  // namespace sptk

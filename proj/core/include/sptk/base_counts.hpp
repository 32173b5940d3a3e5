#pragma once

#include <string>

namespace sptk {

/* The four base counting functions over partitions with distinct parts:
 *   PD          all parts distinct
 *   PDE         all parts distinct and even
 *   PDO         all parts distinct and odd
 *   PDO_SIGNED  distinct odd parts, counted with sign (-1)^length
 * All four count the empty partition at n = 0, so f(0) = 1. */
enum class BaseKind { PD, PDE, PDO, PDO_SIGNED };

// Exact count by direct enumeration over distinct-part partitions.
// Throws std::invalid_argument for n < 0.
long long count_base(BaseKind kind, long long n);

const char* to_string(BaseKind kind);

}  // namespace sptk

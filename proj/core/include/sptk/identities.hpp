#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sptk/base_counts.hpp"
#include "sptk/bijections.hpp"
#include "sptk/series.hpp"
#include "sptk/spt_sets.hpp"

namespace sptk {

enum class OutputFormat { text, json, csv };

/* Ranges for a verification run. Bounds must respect the enumeration caps
 * (k_max <= 8, n_max <= 60, and 2*t_max+1 <= n_max). Everything is
 * deterministic; there is no seed. */
struct RunConfig {
    int k_max = 6;
    long long n_max = 60;
    long long t_max = 25;
    OutputFormat format = OutputFormat::text;
    std::string out_path;  // empty writes to stdout

    void validate() const;  // throws std::invalid_argument on bad bounds
};

/* Result of checking one identity over its full parameter range. All
 * identities are exact integer equalities, so passing means a maximal
 * absolute deviation of zero. */
struct IdentityReport {
    std::string id;
    // range per parameter, in a fixed order, e.g. {"k", {2, 6}}, {"n", {1, 60}}
    std::vector<std::pair<std::string, std::pair<long long, long long>>> params;
    long long cells_checked = 0;
    long long max_abs_deviation = 0;
    std::string worst_cell;  // locates the largest deviation, empty when passing
    long long elapsed_ms = 0;

    bool passed() const { return max_abs_deviation == 0; }
};

/* Memoizing front end over the enumeration counters: one sweep over the
 * partitions of n serves every multiplicity k and both families. Not
 * thread-safe; use one cache per runner. */
class CountCache {
public:
    explicit CountCache(Limits limits = {}) : limits_(limits) {}

    // Zero bundle for n < 1 or k > n; otherwise the enumerated bundle.
    const CountBundle& bundle(SptFamily family, int k, long long n);

    // Base counting function with the series conventions: 1 at m = 0,
    // 0 for m < 0.
    long long base(BaseKind kind, long long m);

    const Limits& limits() const { return limits_; }

private:
    Limits limits_;
    std::map<long long, std::vector<CountBundle>> by_weight_[2];
    std::map<std::pair<int, long long>, long long> base_;
    CountBundle zero_;
};

// Identity ids in canonical (reporting) order.
const std::vector<std::string>& identity_catalog();

// One-line statement of the identity behind an id.
std::string identity_summary(const std::string& id);

// Evaluates both sides of the identity over its validity range within cfg.
// Unknown ids raise std::invalid_argument listing the catalog.
IdentityReport check_identity(const std::string& id, const RunConfig& cfg, CountCache& cache);
IdentityReport check_identity(const std::string& id, const RunConfig& cfg);

// Triple check of one theorem: enumerated counts vs. the class generating
// function vs. the closed-form right-hand side, coefficient by coefficient.
IdentityReport check_theorem_series(TheoremId id, const RunConfig& cfg, CountCache& cache);

// Runs every rule over every admissible cell with component weights
// bounded by cfg.n_max: THM1A for 2 <= k <= k_max, L1..L4 for
// 1 <= k <= k_max - 1.
std::vector<BijectionReport> run_bijection_suite(const RunConfig& cfg);

struct VerifyRunResult {
    std::vector<IdentityReport> identities;
    std::vector<BijectionReport> bijections;

    bool all_passed() const;
};

// Full catalog plus the bijection suite.
VerifyRunResult verify_all(const RunConfig& cfg);

}  // namespace sptk

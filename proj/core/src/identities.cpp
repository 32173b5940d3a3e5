#include "sptk/identities.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace sptk {

void RunConfig::validate() const {
    const Limits caps;
    if (k_max < 1 || k_max > caps.k_max)
        throw std::invalid_argument("RunConfig: k_max must be in [1, " +
                                    std::to_string(caps.k_max) + "]");
    if (n_max < 1 || n_max > caps.n_max)
        throw std::invalid_argument("RunConfig: n_max must be in [1, " +
                                    std::to_string(caps.n_max) + "]");
    if (t_max < 1 || 2 * t_max + 1 > n_max)
        throw std::invalid_argument("RunConfig: t_max must satisfy 1 <= t_max and 2*t_max+1 <= n_max");
}

const CountBundle& CountCache::bundle(SptFamily family, int k, long long n) {
    if (k < 1)
        throw std::invalid_argument("CountCache: k must be >= 1");
    if (n < 1 || k > n)
        return zero_;
    if (k > limits_.k_max)
        throw std::domain_error("CountCache: k=" + std::to_string(k) + " exceeds cap k_max=" +
                                std::to_string(limits_.k_max));
    auto& slot = by_weight_[family == SptFamily::D ? 0 : 1][n];
    if (slot.empty())
        slot = count_by_multiplicity(family, n, limits_);
    return slot[static_cast<std::size_t>(k)];
}

long long CountCache::base(BaseKind kind, long long m) {
    if (m < 0)
        return 0;
    const auto key = std::make_pair(static_cast<int>(kind), m);
    auto it = base_.find(key);
    if (it == base_.end())
        it = base_.emplace(key, count_base(kind, m)).first;
    return it->second;
}

namespace {

std::string cell_kn(int k, long long n) {
    return "k=" + std::to_string(k) + " n=" + std::to_string(n);
}

std::string cell_kt(int k, long long t) {
    return "k=" + std::to_string(k) + " t=" + std::to_string(t);
}

/* Per-identity evaluation state: cell counting, deviation tracking, and
 * convention wrappers around the cache (spt counters vanish at n < 1,
 * base counters are 1 at 0 and vanish below). */
struct Ctx {
    const RunConfig& cfg;
    CountCache& cache;
    IdentityReport rep;

    void observe_dev(long long dev, const std::string& cell) {
        ++rep.cells_checked;
        if (dev < 0)
            dev = -dev;
        if (dev > rep.max_abs_deviation) {
            rep.max_abs_deviation = dev;
            rep.worst_cell = cell;
        }
    }
    void observe_eq(long long lhs, long long rhs, const std::string& cell) {
        observe_dev(lhs - rhs, cell);
    }

    long long sptd(int k, long long n) {
        return n >= 1 ? cache.bundle(SptFamily::D, k, n).total : 0;
    }
    long long sptd_signed(int k, long long n) {
        return n >= 1 ? cache.bundle(SptFamily::D, k, n).signed_count : 0;
    }
    long long sptdo(int k, long long n) {
        return n >= 1 ? cache.bundle(SptFamily::DO, k, n).total : 0;
    }
    long long sptdo_signed(int k, long long n) {
        return n >= 1 ? cache.bundle(SptFamily::DO, k, n).signed_count : 0;
    }
    long long b0(int k, long long n) {
        return n >= 1 ? cache.bundle(SptFamily::DO, k, n).even_t : 0;
    }
    long long b1(int k, long long n) {
        return n >= 1 ? cache.bundle(SptFamily::DO, k, n).odd_t : 0;
    }
    long long pd(long long m) { return cache.base(BaseKind::PD, m); }
    long long pde(long long m) { return cache.base(BaseKind::PDE, m); }
    long long pdo(long long m) { return cache.base(BaseKind::PDO, m); }
    long long pdo_signed(long long m) { return cache.base(BaseKind::PDO_SIGNED, m); }
};

using Evaluator = std::function<void(Ctx&)>;

struct Entry {
    const char* id;
    const char* summary;
    Evaluator run;
};

int lemma_k_limit(const RunConfig& cfg) {
    // lemma cells reference multiplicities k and k+1
    const Limits caps;
    return std::min(cfg.k_max - 1, caps.k_max - 1);
}

void eval_base_bridge(Ctx& ctx, BaseKind kind) {
    ctx.rep.params = {{"n", {0, ctx.cfg.n_max}}};
    const auto gf = base_gf(kind, static_cast<int>(ctx.cfg.n_max));
    for (long long n = 0; n <= ctx.cfg.n_max; ++n)
        ctx.observe_eq(ctx.cache.base(kind, n), gf[static_cast<int>(n)],
                       "n=" + std::to_string(n));
}

void eval_theorem_triple(Ctx& ctx, TheoremId id) {
    ctx.rep.params = {{"k", {1, ctx.cfg.k_max}}, {"n", {1, ctx.cfg.n_max}}};
    const GenfunFlavor flavor = id == TheoremId::THM1   ? GenfunFlavor::SPTKD
                                : id == TheoremId::THM2 ? GenfunFlavor::SPTKDO_SIGNED
                                                        : GenfunFlavor::SPTKDO;
    for (int k = 1; k <= ctx.cfg.k_max; ++k) {
        const auto gf = genfun(flavor, k, static_cast<int>(ctx.cfg.n_max));
        const auto rhs = theorem_rhs(id, k, static_cast<int>(ctx.cfg.n_max));
        for (long long n = 1; n <= ctx.cfg.n_max; ++n) {
            const auto& bundle = ctx.cache.bundle(SptFamily::DO, k, n);
            long long enumerated;
            switch (id) {
            case TheoremId::THM1:
                enumerated = ctx.sptd(k, n);
                break;
            case TheoremId::THM2:
                enumerated = bundle.signed_count;
                break;
            default:
                enumerated = bundle.total;
                break;
            }
            const long long g = gf[static_cast<int>(n)];
            const long long r = rhs[static_cast<int>(n)];
            const long long dev = std::max({std::llabs(enumerated - g), std::llabs(g - r),
                                            std::llabs(enumerated - r)});
            ctx.observe_dev(dev, cell_kn(k, n));
        }
    }
}

void eval_genfun_d_signed(Ctx& ctx) {
    ctx.rep.params = {{"k", {1, ctx.cfg.k_max}}, {"n", {1, ctx.cfg.n_max}}};
    for (int k = 1; k <= ctx.cfg.k_max; ++k) {
        const auto gf = genfun(GenfunFlavor::SPTKD_SIGNED, k, static_cast<int>(ctx.cfg.n_max));
        for (long long n = 1; n <= ctx.cfg.n_max; ++n)
            ctx.observe_eq(ctx.sptd_signed(k, n), gf[static_cast<int>(n)], cell_kn(k, n));
    }
}

void eval_thm1_1a(Ctx& ctx) {
    ctx.rep.params = {{"k", {2, ctx.cfg.k_max}}, {"n", {1, ctx.cfg.n_max}}};
    for (int k = 2; k <= ctx.cfg.k_max; ++k)
        for (long long n = 1; n <= ctx.cfg.n_max; ++n) {
            const long long lhs = ctx.sptd(k, n) + ctx.sptd(k - 1, n);
            const long long rhs = ctx.sptd(k - 1, n - k + 1) + ctx.pd(n - k + 1);
            ctx.observe_eq(lhs, rhs, cell_kn(k, n));
        }
}

void eval_lemma(Ctx& ctx, int which) {
    const int k_hi = lemma_k_limit(ctx.cfg);
    ctx.rep.params = {{"k", {1, k_hi}}, {"t", {1, ctx.cfg.t_max}}};
    for (int k = 1; k <= k_hi; ++k)
        for (long long t = 1; t <= ctx.cfg.t_max; ++t) {
            long long lhs = 0;
            long long rhs = 0;
            switch (which) {
            case 1:
                lhs = ctx.b0(k + 1, 2 * t + 1) + ctx.b1(k, 2 * t);
                rhs = ctx.b1(k, 2 * t - 2 * k) + ctx.pde(2 * t - k);
                break;
            case 2:
                lhs = ctx.b0(k + 1, 2 * t) + ctx.b1(k, 2 * t - 1);
                rhs = ctx.b1(k, 2 * t - 2 * k - 1) + ctx.pde(2 * t - k - 1) +
                      ctx.pdo(2 * t - 2 * k - 1);
                break;
            case 3:
                lhs = ctx.b0(k, 2 * t - 1) + ctx.b1(k + 1, 2 * t);
                rhs = ctx.b0(k, 2 * t - 2 * k - 1) + ctx.pde(2 * t - k - 1);
                break;
            case 4:
                lhs = ctx.b0(k, 2 * t) + ctx.b1(k + 1, 2 * t + 1);
                rhs = ctx.b0(k, 2 * t - 2 * k) + ctx.pde(2 * t - k) + ctx.pdo(2 * t - 2 * k);
                break;
            }
            ctx.observe_eq(lhs, rhs, cell_kt(k, t));
        }
}

void eval_lemma5(Ctx& ctx) {
    ctx.rep.params = {{"t", {1, ctx.cfg.t_max}}};
    for (long long t = 1; t <= ctx.cfg.t_max; ++t) {
        const std::string cell = "t=" + std::to_string(t);
        ctx.observe_eq(ctx.b0(1, 2 * t + 1), ctx.pde(2 * t), cell);
        ctx.observe_eq(ctx.b0(1, 2 * t), ctx.pde(2 * t - 1) + ctx.pdo(2 * t - 1), cell);
        ctx.observe_eq(ctx.b1(1, 2 * t), ctx.pde(2 * t - 1), cell);
        ctx.observe_eq(ctx.b1(1, 2 * t + 1), ctx.pde(2 * t) + ctx.pdo(2 * t), cell);
    }
}

void eval_thm2_2a(Ctx& ctx) {
    ctx.rep.params = {{"k", {2, ctx.cfg.k_max}}, {"n", {1, ctx.cfg.n_max}}};
    for (int k = 2; k <= ctx.cfg.k_max; ++k)
        for (long long n = 1; n <= ctx.cfg.n_max; ++n) {
            const long long m = n - 2 * k + 1;
            ctx.observe_eq(ctx.sptdo_signed(k - 1, n - 1) - ctx.sptdo_signed(k, n),
                           ctx.sptdo_signed(k - 1, m) + ctx.pdo_signed(m), cell_kn(k, n));
            ctx.observe_eq(ctx.sptdo(k, n) + ctx.sptdo(k - 1, n - 1),
                           ctx.sptdo(k - 1, m) + 2 * ctx.pde(n - k) + ctx.pdo(m),
                           cell_kn(k, n));
        }
}

void eval_thm2_2b(Ctx& ctx) {
    ctx.rep.params = {{"n", {2, ctx.cfg.n_max}}};
    for (long long n = 2; n <= ctx.cfg.n_max; ++n) {
        const std::string cell = "n=" + std::to_string(n);
        ctx.observe_eq(ctx.sptdo(1, n), 2 * ctx.pde(n - 1) + ctx.pdo(n - 1), cell);
        ctx.observe_eq(ctx.sptdo_signed(1, n), -ctx.pdo_signed(n - 1), cell);
    }
}

void eval_eqthm2(Ctx& ctx, int which) {
    ctx.rep.params = {{"k", {2, ctx.cfg.k_max}}, {"n", {1, ctx.cfg.n_max}}};
    for (int k = 2; k <= ctx.cfg.k_max; ++k)
        for (long long n = 1; n <= ctx.cfg.n_max; ++n) {
            const long long m = n - 2 * k + 1;
            if (which == 1) {
                const long long sign = ((m % 2) + 2) % 2 == 0 ? 1 : -1;  // (-1)^m
                const long long lhs = ctx.b0(k - 1, m) - ctx.b1(k - 1, m) + sign * ctx.pdo(m);
                const long long rhs = ctx.b0(k - 1, n - 1) - ctx.b1(k - 1, n - 1) -
                                      ctx.b0(k, n) + ctx.b1(k, n);
                ctx.observe_eq(lhs, rhs, cell_kn(k, n));
            } else {
                const long long lhs = ctx.b0(k, n) + ctx.b1(k, n) + ctx.b0(k - 1, n - 1) +
                                      ctx.b1(k - 1, n - 1);
                const long long rhs = ctx.b0(k - 1, m) + ctx.b1(k - 1, m) +
                                      2 * ctx.pde(n - k) + ctx.pdo(m);
                ctx.observe_eq(lhs, rhs, cell_kn(k, n));
            }
        }
}

void eval_corollary(Ctx& ctx, const std::string& id) {
    long long n_lo = 2;
    if (id == "COR5B")
        n_lo = 4;
    if (id == "COR8B")
        n_lo = 5;
    ctx.rep.params = {{"n", {n_lo, ctx.cfg.n_max}}};
    for (long long n = n_lo; n <= ctx.cfg.n_max; ++n) {
        const std::string cell = "n=" + std::to_string(n);
        if (id == "COR5A")
            ctx.observe_eq(ctx.sptd(2, n), 2 * ctx.pd(n - 1) - ctx.pd(n), cell);
        else if (id == "COR5B")
            ctx.observe_eq(ctx.sptd(3, n), 2 * ctx.pd(n - 3) - 2 * ctx.pd(n - 1) + ctx.pd(n),
                           cell);
        else if (id == "COR7")
            ctx.observe_eq(ctx.sptdo(1, n), 2 * ctx.pde(n - 1) + ctx.pdo(n - 1), cell);
        else if (id == "COR8A")
            ctx.observe_eq(ctx.sptdo_signed(1, n), -ctx.pdo_signed(n - 1), cell);
        else if (id == "COR8B")
            ctx.observe_eq(ctx.sptdo_signed(2, n),
                           ctx.pdo_signed(n - 4) - ctx.pdo_signed(n - 3) - ctx.pdo_signed(n - 2),
                           cell);
    }
}

const std::vector<Entry>& catalog() {
    static const std::vector<Entry> entries = {
        {"BASE-PD", "p_d(n) = [q^n] prod(1+q^j)",
         [](Ctx& c) { eval_base_bridge(c, BaseKind::PD); }},
        {"BASE-PDE", "p_de(n) = [q^n] prod(1+q^{2j})",
         [](Ctx& c) { eval_base_bridge(c, BaseKind::PDE); }},
        {"BASE-PDO", "p_do(n) = [q^n] prod(1+q^{2j-1})",
         [](Ctx& c) { eval_base_bridge(c, BaseKind::PDO); }},
        {"BASE-PDOS", "p'_do(n) = [q^n] prod(1-q^{2j-1})",
         [](Ctx& c) { eval_base_bridge(c, BaseKind::PDO_SIGNED); }},
        {"THM1", "sptk_d(n): enumeration = genfun(SPTKD) = P_k(q)(-q;q)inf + (-1)^k (q;q)_{k-1}",
         [](Ctx& c) { eval_theorem_triple(c, TheoremId::THM1); }},
        {"THM2",
         "sptk'_do(n): enumeration = genfun(SPTKDO_SIGNED) = T_k(q)(q;q^2)inf + 2q^k (q^2;q^2)_{k-1}",
         [](Ctx& c) { eval_theorem_triple(c, TheoremId::THM2); }},
        {"THM3",
         "sptk_do(n): enumeration = genfun(SPTKDO) = V_k(q)(-q^2;q^2)inf + W_k(q)(-q;q^2)inf + 2(-q)^k (q^2;q^2)_{k-1}",
         [](Ctx& c) { eval_theorem_triple(c, TheoremId::THM3); }},
        {"GF-D-SIGNED", "sptk'_d(n) = [q^n] sum_m q^{km} (q^{m+1};q)inf",
         [](Ctx& c) { eval_genfun_d_signed(c); }},
        {"THM1-1A", "sptk_d(n) + spt(k-1)_d(n) = spt(k-1)_d(n-k+1) + p_d(n-k+1)",
         [](Ctx& c) { eval_thm1_1a(c); }},
        {"LEM1", "B0(k+1,2t+1) + B1(k,2t) = B1(k,2t-2k) + p_de(2t-k)",
         [](Ctx& c) { eval_lemma(c, 1); }},
        {"LEM2", "B0(k+1,2t) + B1(k,2t-1) = B1(k,2t-2k-1) + p_de(2t-k-1) + p_do(2t-2k-1)",
         [](Ctx& c) { eval_lemma(c, 2); }},
        {"LEM3", "B0(k,2t-1) + B1(k+1,2t) = B0(k,2t-2k-1) + p_de(2t-k-1)",
         [](Ctx& c) { eval_lemma(c, 3); }},
        {"LEM4", "B0(k,2t) + B1(k+1,2t+1) = B0(k,2t-2k) + p_de(2t-k) + p_do(2t-2k)",
         [](Ctx& c) { eval_lemma(c, 4); }},
        {"LEM5", "B0(1,2t+1)=p_de(2t), B0(1,2t)=p_de(2t-1)+p_do(2t-1), B1(1,2t)=p_de(2t-1), B1(1,2t+1)=p_de(2t)+p_do(2t)",
         [](Ctx& c) { eval_lemma5(c); }},
        {"THM2-2A",
         "spt(k-1)'_do(n-1) - sptk'_do(n) = spt(k-1)'_do(n-2k+1) + p'_do(n-2k+1); "
         "sptk_do(n) + spt(k-1)_do(n-1) = spt(k-1)_do(n-2k+1) + 2p_de(n-k) + p_do(n-2k+1)",
         [](Ctx& c) { eval_thm2_2a(c); }},
        {"THM2-2B", "spt1_do(n) = 2p_de(n-1) + p_do(n-1); spt1'_do(n) = -p'_do(n-1)",
         [](Ctx& c) { eval_thm2_2b(c); }},
        {"EQTHM2-1",
         "B0(k-1,n-2k+1) - B1(k-1,n-2k+1) + (-1)^{n-2k+1} p_do(n-2k+1) = "
         "B0(k-1,n-1) - B1(k-1,n-1) - B0(k,n) + B1(k,n)",
         [](Ctx& c) { eval_eqthm2(c, 1); }},
        {"EQTHM2-2",
         "B0(k,n) + B1(k,n) + B0(k-1,n-1) + B1(k-1,n-1) = "
         "B0(k-1,n-2k+1) + B1(k-1,n-2k+1) + 2p_de(n-k) + p_do(n-2k+1)",
         [](Ctx& c) { eval_eqthm2(c, 2); }},
        {"COR5A", "spt2_d(n) = 2p_d(n-1) - p_d(n), n >= 2",
         [](Ctx& c) { eval_corollary(c, "COR5A"); }},
        {"COR5B", "spt3_d(n) = 2p_d(n-3) - 2p_d(n-1) + p_d(n), n >= 4",
         [](Ctx& c) { eval_corollary(c, "COR5B"); }},
        {"COR7", "spt1_do(n) = 2p_de(n-1) + p_do(n-1), n >= 2",
         [](Ctx& c) { eval_corollary(c, "COR7"); }},
        {"COR8A", "spt1'_do(n) = -p'_do(n-1), n >= 2",
         [](Ctx& c) { eval_corollary(c, "COR8A"); }},
        {"COR8B", "spt2'_do(n) = p'_do(n-4) - p'_do(n-3) - p'_do(n-2), n >= 5",
         [](Ctx& c) { eval_corollary(c, "COR8B"); }},
    };
    return entries;
}

IdentityReport run_entry(const Entry& entry, const RunConfig& cfg, CountCache& cache) {
    Ctx ctx{cfg, cache, {}};
    ctx.rep.id = entry.id;
    const auto start = std::chrono::steady_clock::now();
    entry.run(ctx);
    const auto stop = std::chrono::steady_clock::now();
    ctx.rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return ctx.rep;
}

}  // namespace

const std::vector<std::string>& identity_catalog() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& entry : catalog())
            out.emplace_back(entry.id);
        return out;
    }();
    return ids;
}

std::string identity_summary(const std::string& id) {
    for (const auto& entry : catalog())
        if (id == entry.id)
            return entry.summary;
    throw std::invalid_argument("unknown identity id: " + id);
}

IdentityReport check_identity(const std::string& id, const RunConfig& cfg, CountCache& cache) {
    cfg.validate();
    for (const auto& entry : catalog())
        if (id == entry.id)
            return run_entry(entry, cfg, cache);
    std::ostringstream msg;
    msg << "unknown identity id '" << id << "'; catalog:";
    for (const auto& known : identity_catalog())
        msg << ' ' << known;
    throw std::invalid_argument(msg.str());
}

IdentityReport check_identity(const std::string& id, const RunConfig& cfg) {
    CountCache cache;
    return check_identity(id, cfg, cache);
}

IdentityReport check_theorem_series(TheoremId id, const RunConfig& cfg, CountCache& cache) {
    return check_identity(to_string(id), cfg, cache);
}

std::vector<BijectionReport> run_bijection_suite(const RunConfig& cfg) {
    cfg.validate();
    std::vector<BijectionReport> out;
    for (int k = 2; k <= cfg.k_max; ++k)
        for (long long n = 1; n <= cfg.n_max; ++n)
            out.push_back(verify_rule({RuleId::THM1A, k}, n));
    const RuleId lemma_rules[] = {RuleId::L1, RuleId::L2, RuleId::L3, RuleId::L4};
    for (const RuleId id : lemma_rules) {
        // largest component weight is 2t+1 (L1, L4) or 2t (L2, L3)
        const long long t_hi = (id == RuleId::L1 || id == RuleId::L4) ? (cfg.n_max - 1) / 2
                                                                      : cfg.n_max / 2;
        for (int k = 1; k <= cfg.k_max - 1; ++k)
            for (long long t = 1; t <= t_hi; ++t)
                out.push_back(verify_rule({id, k}, t));
    }
    return out;
}

bool VerifyRunResult::all_passed() const {
    for (const auto& rep : identities)
        if (!rep.passed())
            return false;
    for (const auto& rep : bijections)
        if (!rep.passed())
            return false;
    return true;
}

VerifyRunResult verify_all(const RunConfig& cfg) {
    cfg.validate();
    VerifyRunResult result;
    CountCache cache;
    for (const auto& entry : catalog())
        result.identities.push_back(run_entry(entry, cfg, cache));
    result.bijections = run_bijection_suite(cfg);
    return result;
}

}  // namespace sptk

#include "sptk/spt_sets.hpp"

#include <stdexcept>
#include <string>

#include "part_shape.hpp"

namespace sptk {

namespace {

void check_query(const SptQuery& q) {
    if (q.k < 1)
        throw std::invalid_argument("SptQuery: k must be >= 1");
    if (q.n < 1)
        throw std::invalid_argument("SptQuery: n must be >= 1");
}

void check_caps(int k, long long n, const Limits& limits) {
    if (k > limits.k_max)
        throw std::domain_error("count: k=" + std::to_string(k) +
                                " exceeds configured cap k_max=" + std::to_string(limits.k_max));
    if (n > limits.n_max)
        throw std::domain_error("count: n=" + std::to_string(n) +
                                " exceeds configured cap n_max=" + std::to_string(limits.n_max));
}

}  // namespace

bool is_member(const Partition& p, const SptQuery& q) {
    check_query(q);
    if (p.weight() != q.n)
        throw std::invalid_argument("is_member: partition " + p.str() + " has weight " +
                                    std::to_string(p.weight()) + ", query expects n=" +
                                    std::to_string(q.n));
    const auto tag = q.family == SptFamily::D ? ClassTag::spt_d(q.k, q.n)
                                              : ClassTag::spt_do(q.k, q.n);
    return classify(p, tag);
}

CountBundle count(const SptQuery& q, const Limits& limits) {
    check_query(q);
    check_caps(q.k, q.n, limits);
    if (q.n < q.k)
        return {};
    CountBundle bundle;
    for_each_partition(q.n, [&](std::span<const int> parts) {
        if (parts.empty())
            return;
        const auto st = stats(parts);
        if (st.smallest_mult != q.k)
            return;
        const auto above = parts.first(static_cast<std::size_t>(st.num_greater));
        if (!detail::strictly_decreasing(above))
            return;
        if (q.family == SptFamily::DO &&
            !detail::all_parity(above, (st.smallest & 1) ^ 1))
            return;
        ++bundle.total;
        (st.num_greater % 2 == 0 ? bundle.even_t : bundle.odd_t) += 1;
    });
    bundle.signed_count = bundle.even_t - bundle.odd_t;
    return bundle;
}

std::vector<CountBundle> count_by_multiplicity(SptFamily family, long long n,
                                               const Limits& limits) {
    if (n < 1)
        throw std::invalid_argument("count_by_multiplicity: n must be >= 1");
    check_caps(1, n, limits);
    std::vector<CountBundle> table(static_cast<std::size_t>(n) + 1);
    for_each_partition(n, [&](std::span<const int> parts) {
        const auto st = stats(parts);
        const auto above = parts.first(static_cast<std::size_t>(st.num_greater));
        if (!detail::strictly_decreasing(above))
            return;
        if (family == SptFamily::DO && !detail::all_parity(above, (st.smallest & 1) ^ 1))
            return;
        auto& bundle = table[static_cast<std::size_t>(st.smallest_mult)];
        ++bundle.total;
        (st.num_greater % 2 == 0 ? bundle.even_t : bundle.odd_t) += 1;
    });
    for (auto& bundle : table)
        bundle.signed_count = bundle.even_t - bundle.odd_t;
    return table;
}

const char* to_string(SptFamily family) {
    return family == SptFamily::D ? "D" : "DO";
}

}  // namespace sptk

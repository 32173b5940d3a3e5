#include "sptk/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sptk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1)
            throw std::invalid_argument("Partition: every part must be >= 1, got " +
                                        std::to_string(p));
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::from_sorted(std::vector<int> sorted_desc) {
    Partition p;
    p.parts_ = std::move(sorted_desc);
    p.weight_ = std::accumulate(p.parts_.begin(), p.parts_.end(), 0LL);
    return p;
}

std::string Partition::str() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out << ", ";
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

PartitionStats stats(std::span<const int> p) {
    if (p.empty())
        throw std::invalid_argument("stats undefined on empty partition");
    PartitionStats st;
    st.length = static_cast<int>(p.size());
    st.smallest = p.back();
    int i = st.length - 2;
    st.smallest_mult = 1;
    while (i >= 0 && p[static_cast<std::size_t>(i)] == st.smallest) {
        ++st.smallest_mult;
        --i;
    }
    if (i >= 0)
        st.second_smallest = p[static_cast<std::size_t>(i)];
    st.num_greater = st.length - st.smallest_mult;
    return st;
}

PartitionStats stats(const Partition& p) {
    return stats(p.span());
}

namespace detail {

bool next_partition(std::vector<int>& p) {
    // Strip trailing ones, then split the rightmost part > 1 into the
    // lexicographically largest layout of smaller parts.
    std::size_t i = p.size();
    long long rem = 0;
    while (i > 0 && p[i - 1] == 1) {
        rem += 1;
        --i;
    }
    if (i == 0)
        return false;
    const int v = p[i - 1] - 1;
    rem += p[i - 1];
    p.resize(i - 1);
    while (rem >= v) {
        p.push_back(v);
        rem -= v;
    }
    if (rem > 0)
        p.push_back(static_cast<int>(rem));
    return true;
}

}  // namespace detail

std::vector<Partition> enumerate_partitions(long long n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](std::span<const int> parts) {
        out.push_back(Partition::from_sorted({parts.begin(), parts.end()}));
    });
    return out;
}

std::vector<Partition> enumerate_partitions(long long n, const PartitionPredicate& keep) {
    std::vector<Partition> out;
    for_each_partition(n, [&](std::span<const int> parts) {
        auto p = Partition::from_sorted({parts.begin(), parts.end()});
        if (keep(p))
            out.push_back(std::move(p));
    });
    return out;
}

}  // namespace sptk

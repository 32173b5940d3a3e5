#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sptk {

/* A partition of a non-negative integer: positive parts stored
 * non-increasing. The empty partition is valid and has weight 0. */
class Partition {
public:
    Partition() = default;

    // Accepts parts in any order; rejects entries < 1.
    explicit Partition(std::vector<int> parts);

    // Trusted constructor for callers that already hold a non-increasing
    // list of positive parts (enumeration hot path).
    static Partition from_sorted(std::vector<int> sorted_desc);

    const std::vector<int>& parts() const { return parts_; }
    std::span<const int> span() const { return parts_; }
    long long weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts_ < b.parts_;
    }

    std::string str() const;  // "(3, 2, 2, 1)"; "()" for the empty partition

private:
    std::vector<int> parts_;
    long long weight_ = 0;
};

/* Smallest-part statistics of a non-empty partition. */
struct PartitionStats {
    int smallest = 0;
    int smallest_mult = 0;  // multiplicity of the smallest part
    std::optional<int> second_smallest;  // absent iff only one distinct value
    int num_greater = 0;  // parts strictly greater than the smallest
    int length = 0;       // smallest_mult + num_greater
};

// Both throw std::invalid_argument("stats undefined on empty partition").
PartitionStats stats(std::span<const int> sorted_desc);
PartitionStats stats(const Partition& p);

namespace detail {

// Advances a non-increasing part list to its successor in decreasing
// lexicographic order; returns false once the all-ones partition is passed.
bool next_partition(std::vector<int>& parts);

inline void check_enumerable(long long n) {
    if (n < 0)
        throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    if (n > std::numeric_limits<int>::max())
        throw std::invalid_argument("enumerate_partitions: n too large");
}

}  // namespace detail

/* Visits every partition of n exactly once, in decreasing lexicographic
 * order, as a non-increasing span. n = 0 visits the empty partition. */
template <class Visit>
void for_each_partition(long long n, Visit&& visit) {
    detail::check_enumerable(n);
    std::vector<int> parts;
    if (n > 0)
        parts.assign(1, static_cast<int>(n));
    do {
        visit(std::span<const int>{parts});
    } while (detail::next_partition(parts));
}

/* Range interface over the same stream; independently restartable. */
class PartitionRange {
public:
    explicit PartitionRange(long long n) : n_(n) { detail::check_enumerable(n); }

    class const_iterator {
    public:
        const_iterator() = default;  // end
        explicit const_iterator(long long n) : done_(false) {
            if (n > 0)
                parts_.assign(1, static_cast<int>(n));
        }
        const std::vector<int>& operator*() const { return parts_; }
        const_iterator& operator++() {
            if (!detail::next_partition(parts_))
                done_ = true;
            return *this;
        }
        friend bool operator==(const const_iterator& a, const const_iterator& b) {
            if (a.done_ || b.done_)
                return a.done_ == b.done_;
            return a.parts_ == b.parts_;
        }

    private:
        std::vector<int> parts_;
        bool done_ = true;
    };

    const_iterator begin() const { return const_iterator(n_); }
    const_iterator end() const { return const_iterator(); }

private:
    long long n_;
};

using PartitionPredicate = std::function<bool(const Partition&)>;

// Materialized enumeration, optionally filtered to one class.
std::vector<Partition> enumerate_partitions(long long n);
std::vector<Partition> enumerate_partitions(long long n, const PartitionPredicate& keep);

}  // namespace sptk

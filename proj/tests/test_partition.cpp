#include <set>
#include <vector>

#include "doctest.h"
#include "sptk/partition.hpp"

using namespace sptk;

namespace {

// A000041, p(0)..p(30)
const long long kPartitionCounts[] = {1,    1,    2,    3,    5,    7,    11,   15,
                                      22,   30,   42,   56,   77,   101,  135,  176,
                                      231,  297,  385,  490,  627,  792,  1002, 1255,
                                      1575, 1958, 2436, 3010, 3718, 4565, 5604};

bool all_distinct(const Partition& p) {
    for (int i = 1; i < p.length(); ++i)
        if (p[i] >= p[i - 1])
            return false;
    return true;
}

}  // namespace

TEST_SUITE("partition") {

TEST_CASE("construction canonicalizes and caches the weight") {
    const Partition p({1, 2, 2, 3});
    CHECK(p.parts() == std::vector<int>{3, 2, 2, 1});
    CHECK(p.weight() == 8);

    const Partition empty(std::vector<int>{});
    CHECK(empty.empty());
    CHECK(empty.weight() == 0);

    const Partition single({5});
    CHECK(single.parts() == std::vector<int>{5});
    CHECK(single.weight() == 5);

    CHECK_THROWS_AS(Partition({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("stats") {
    const auto st = stats(Partition({3, 2, 2, 1}));
    CHECK(st.smallest == 1);
    CHECK(st.smallest_mult == 1);
    CHECK(st.second_smallest == 2);
    CHECK(st.num_greater == 3);
    CHECK(st.length == 4);

    const auto two_two = stats(Partition({2, 2}));
    CHECK(two_two.smallest == 2);
    CHECK(two_two.smallest_mult == 2);
    CHECK_FALSE(two_two.second_smallest.has_value());
    CHECK(two_two.num_greater == 0);
    CHECK(two_two.length == 2);

    const auto four_one_one = stats(Partition({4, 1, 1}));
    CHECK(four_one_one.smallest == 1);
    CHECK(four_one_one.smallest_mult == 2);
    CHECK(four_one_one.second_smallest == 4);
    CHECK(four_one_one.num_greater == 1);
    CHECK(four_one_one.length == 3);

    CHECK(stats(Partition({7})).length == 1);

    CHECK_THROWS_WITH_AS(stats(Partition(std::vector<int>{})),
                         "stats undefined on empty partition", std::invalid_argument);
}

TEST_CASE("length bookkeeping: length = smallest_mult + num_greater") {
    for (long long n = 1; n <= 18; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            const auto st = stats(p);
            CHECK(st.length == st.smallest_mult + st.num_greater);
            if (st.second_smallest)
                CHECK(*st.second_smallest > st.smallest);
        }
}

TEST_CASE("enumeration of n=4 in decreasing lexicographic order") {
    const auto parts = enumerate_partitions(4);
    REQUIRE(parts.size() == 5);
    CHECK(parts[0].parts() == std::vector<int>{4});
    CHECK(parts[1].parts() == std::vector<int>{3, 1});
    CHECK(parts[2].parts() == std::vector<int>{2, 2});
    CHECK(parts[3].parts() == std::vector<int>{2, 1, 1});
    CHECK(parts[4].parts() == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("n=0 yields exactly the empty partition") {
    const auto parts = enumerate_partitions(0);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].empty());
}

TEST_CASE("filtered enumeration") {
    const auto distinct = enumerate_partitions(4, all_distinct);
    REQUIRE(distinct.size() == 2);
    CHECK(distinct[0].parts() == std::vector<int>{4});
    CHECK(distinct[1].parts() == std::vector<int>{3, 1});
}

TEST_CASE("negative n is rejected") {
    CHECK_THROWS_AS(enumerate_partitions(-1), std::invalid_argument);
}

TEST_CASE("counts match the textbook table, no duplicates, order strictly decreasing") {
    for (long long n = 0; n <= 30; ++n) {
        std::set<std::vector<int>> seen;
        std::vector<int> prev;
        long long count = 0;
        bool first = true;
        for_each_partition(n, [&](std::span<const int> parts) {
            ++count;
            std::vector<int> v(parts.begin(), parts.end());
            CHECK(seen.insert(v).second);
            if (!first)
                CHECK(v < prev);  // decreasing lexicographic
            prev = std::move(v);
            first = false;
        });
        CHECK(count == kPartitionCounts[n]);
        CHECK(seen.size() == static_cast<std::size_t>(kPartitionCounts[n]));
    }
}

TEST_CASE("range interface agrees with the callback interface") {
    for (long long n : {0LL, 1LL, 7LL, 12LL}) {
        std::vector<std::vector<int>> from_callback;
        for_each_partition(n, [&](std::span<const int> parts) {
            from_callback.emplace_back(parts.begin(), parts.end());
        });
        std::vector<std::vector<int>> from_range;
        for (const auto& parts : PartitionRange(n))
            from_range.push_back(parts);
        CHECK(from_callback == from_range);
    }
}

}  // TEST_SUITE

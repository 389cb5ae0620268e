#include <catch2/catch_amalgamated.hpp>

#include "rgw/partition.hpp"

using namespace rgw;

TEST_CASE("partitions_of counts and order", "[partition]") {
    CHECK(partitions_of(1).size() == 1);
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(10).size() == 42);
    CHECK(partitions_of(12).size() == 77);

    auto ps = partitions_of(4);
    CHECK(ps.front() == Partition({4}));
    CHECK(ps[1] == Partition({3, 1}));
    CHECK(ps[2] == Partition({2, 2}));
    CHECK(ps.back() == Partition({1, 1, 1, 1}));
    CHECK(std::is_sorted(ps.begin(), ps.end()));

    CHECK_THROWS_AS(partitions_of(0), argument_error);
    CHECK_THROWS_AS(partitions_of(13), argument_error);
    CHECK_THROWS_AS(Partition({2, 0}), argument_error);
}

TEST_CASE("conjugate", "[partition]") {
    CHECK(conjugate(Partition({2, 1, 1})) == Partition({3, 1}));
    CHECK(conjugate(Partition({2, 2})) == Partition({2, 2}));
    CHECK(conjugate(Partition({4, 3, 3, 2, 1})) == Partition({5, 4, 3, 1}));
    for (int d = 1; d <= 12; ++d)
        for (const auto& la : partitions_of(d)) {
            CHECK(conjugate(conjugate(la)) == la);
            CHECK(rank(la) == rank(conjugate(la)));
            CHECK(content_sum(la) == -content_sum(conjugate(la)));
        }
}

TEST_CASE("rank", "[partition]") {
    CHECK(rank(Partition({1})) == 1);
    CHECK(rank(Partition({2, 2})) == 2);
    CHECK(rank(Partition({5, 1, 1, 1, 1})) == 1);
}

TEST_CASE("hooks and dimensions", "[partition]") {
    CHECK(hooks(Partition({1})) == std::vector<int>{1});
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end(), std::greater<int>());
        return v;
    };
    CHECK(sorted(hooks(Partition({2, 2}))) == std::vector<int>({3, 2, 2, 1}));
    CHECK(sorted(hooks(Partition({2, 1}))) == std::vector<int>({3, 1, 1}));

    CHECK(dim_rep(Partition({7})) == 1);
    CHECK(dim_rep(Partition({2, 1})) == 2);
    CHECK(dim_rep(Partition({2, 2})) == 2);

    for (int d = 1; d <= 12; ++d) {
        Int sum_sq = 0;
        for (const auto& la : partitions_of(d)) {
            Int prod = 1;
            for (int h : hooks(la)) prod *= h;
            CHECK(dim_rep(la) * prod == factorial(d));
            sum_sq += dim_rep(la) * dim_rep(la);
        }
        CHECK(sum_sq == factorial(d));
    }
}

TEST_CASE("content sums", "[partition]") {
    CHECK(content_sum(Partition({2, 1})) == 0);
    CHECK(content_sum(Partition({2})) == 1);
    CHECK(content_sum(Partition({3})) == 3);
}

TEST_CASE("zeta and class sizes", "[partition]") {
    CHECK(zeta(Partition({1})) == 1);
    CHECK(zeta(Partition({2, 2})) == 8);
    CHECK(zeta(Partition({3, 1, 1})) == 6);
    for (int d = 1; d <= 12; ++d) {
        Rational total = 0;
        for (const auto& la : partitions_of(d)) total += rat(factorial(d), zeta(la));
        CHECK(total == rat(factorial(d)));
    }
}

TEST_CASE("sq", "[partition]") {
    CHECK(sq(Partition({4, 3, 3, 2, 1})) == Partition({3, 3, 2, 2, 1, 1, 1}));
    CHECK(sq(Partition({1, 1, 1})) == Partition({1, 1, 1}));
    CHECK(sq(Partition({2})) == Partition({1, 1}));
    for (int d = 1; d <= 12; ++d)
        for (const auto& la : partitions_of(d)) {
            CHECK(sq(la).size() == la.size());
            CHECK(sign(sq(la)) == 1);
        }
}

TEST_CASE("sign", "[partition]") {
    CHECK(sign(Partition({1, 1, 1})) == 1);
    CHECK(sign(Partition({2})) == -1);
    CHECK(sign(Partition({3, 2})) == -1);
    // d - l(la) has the parity of the number of even parts
    for (int d = 1; d <= 12; ++d)
        for (const auto& la : partitions_of(d)) {
            int evens = 0;
            for (int p : la.parts())
                if (p % 2 == 0) ++evens;
            CHECK((la.size() - la.length()) % 2 == evens % 2);
        }
}

#include "oracles.hpp"
#include "ugggr/partitions.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ugggr;

TEST_SUITE("partitions") {

TEST_CASE("construction validates") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition::from_unsorted({1, 0, 3, 1}) == Partition{3, 1, 1});
    CHECK(Partition{3, 1}.size() == 4);
    CHECK(Partition{3, 1}[5] == 0);
}

TEST_CASE("transpose examples") {
    CHECK(transpose(Partition{2, 1, 1}) == Partition{3, 1});
    CHECK(transpose(Partition{4}) == Partition{1, 1, 1, 1});
    CHECK(transpose(Partition{}) == Partition{});
}

TEST_CASE("transpose matches the diagram oracle and is an involution") {
    for (int n = 0; n <= 12; ++n)
        for (const auto& lam : oracle::all_partitions(n)) {
            CHECK(transpose(lam) == oracle::transpose(lam));
            CHECK(transpose(transpose(lam)) == lam);
        }
}

TEST_CASE("remove_columns") {
    CHECK(remove_columns(Partition{3, 1}, 1) == Partition{2});
    CHECK(remove_columns(Partition{2, 2, 1}, 1) == Partition{1, 1});
    CHECK(remove_columns(Partition{2, 2, 1}, 2) == Partition{});
    for (int n = 0; n <= 9; ++n)
        for (const auto& lam : oracle::all_partitions(n))
            for (int j = 0; j <= lam[0] + 1; ++j) {
                auto t = transpose(lam).parts();
                std::vector<int> rest(t.begin() + std::min<size_t>(j, t.size()), t.end());
                CHECK(transpose(remove_columns(lam, j)) == Partition(rest));
            }
}

TEST_CASE("parabolic order") {
    CHECK(leq_parabolic(Partition{2, 2}, Partition{3, 1}));
    CHECK_FALSE(leq_parabolic(Partition{3, 1}, Partition{2, 2}));
    for (const auto& lam : oracle::all_partitions(4)) CHECK(leq_parabolic(Partition{1, 1, 1, 1}, lam));
}

TEST_CASE("parabolic order is a partial order") {
    for (int n = 0; n <= 8; ++n) {
        auto ps = oracle::all_partitions(n);
        for (const auto& a : ps) {
            CHECK(leq_parabolic(a, a));
            for (const auto& b : ps) {
                if (a != b && leq_parabolic(a, b)) CHECK_FALSE(leq_parabolic(b, a));
                for (const auto& c : ps)
                    if (leq_parabolic(a, b) && leq_parabolic(b, c)) CHECK(leq_parabolic(a, c));
            }
        }
    }
}

TEST_CASE("two_transverse examples") {
    CHECK(two_transverse(Partition{3}, Partition{2}));
    CHECK_FALSE(two_transverse(Partition{1, 1}, Partition{1}));
    CHECK(two_transverse(Partition{2, 1}, Partition{1}));
    CHECK_FALSE(two_transverse(Partition{2, 1}, Partition{2}));
    CHECK(two_transverse(Partition{1, 1}, Partition{1, 1}));
    CHECK(two_transverse(Partition{2}, Partition{1, 1, 1}));
    CHECK_FALSE(two_transverse(Partition{2}, Partition{}));
}

TEST_CASE("two_transverse is symmetric") {
    for (int n = 0; n <= 6; ++n)
        for (int m = 0; m <= 6; ++m)
            for (const auto& a : oracle::all_partitions(n))
                for (const auto& b : oracle::all_partitions(m)) CHECK(two_transverse(a, b) == two_transverse(b, a));
}

TEST_CASE("vertical strips") {
    CHECK(vertical_strip(Partition{2, 1}, Partition{1, 1}));
    CHECK(vertical_strip(Partition{2, 1}, Partition{1}));
    CHECK_FALSE(vertical_strip(Partition{2}, Partition{}));
    CHECK(vertical_strip_pairs(Partition{1}, Partition{1}) == 2);
    CHECK(vertical_strip_pairs(Partition{1, 1}, Partition{1, 1}) == 3);
    CHECK(vertical_strip_pairs(Partition{2}, Partition{}) == 0);
    CHECK(vertical_strip_pairs(Partition{}, Partition{1, 1}) == 1);
    CHECK(vertical_strip_pairs(Partition{}, Partition{2}) == 0);
}

TEST_CASE("weights") {
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(weights(Partition{2})) == std::vector<int>{-1, 1});
    CHECK(sorted(weights(Partition{2, 1, 1})) == std::vector<int>{-1, 0, 0, 1});
    CHECK(sorted(weights(Partition{3})) == std::vector<int>{-2, 0, 2});
    for (int n = 0; n <= 10; ++n)
        for (const auto& lam : oracle::all_partitions(n)) {
            auto w = sorted(weights(lam));
            CHECK(static_cast<int>(w.size()) == n);
            auto neg = w;
            for (auto& x : neg) x = -x;
            CHECK(sorted(neg) == w);
        }
}

TEST_CASE("stats") {
    CHECK(stats(Partition{1, 1}).n_stat == 1);
    CHECK(stats(Partition{1, 1}).hooks == std::vector<int>{2, 1});
    CHECK(stats(Partition{4}).n_stat == 0);
    CHECK(stats(Partition{4}).hooks == std::vector<int>{4, 3, 2, 1});
    CHECK(stats(Partition{2, 1}).n_stat == 1);
    CHECK(stats(Partition{2, 1}).hooks == std::vector<int>{3, 1, 1});
    for (int n = 0; n <= 10; ++n)
        for (const auto& lam : oracle::all_partitions(n)) CHECK(stats(lam).hooks == oracle::hooks(lam));
}

TEST_CASE("enumeration") {
    auto p = oracle::partition_numbers(15);
    for (int n = 0; n <= 15; ++n) CHECK(static_cast<long long>(partitions_of(n).size()) == p[n]);
    auto p4 = partitions_of(4);
    CHECK(p4.front() == Partition{4});
    CHECK(p4.back() == Partition{1, 1, 1, 1});
    CHECK(subpartitions(Partition{2, 1}).size() == 5);
    CHECK(is_hook(Partition{3, 1, 1}));
    CHECK_FALSE(is_hook(Partition{2, 2}));
}

TEST_CASE("text forms") {
    CHECK(to_string(Partition{2, 1, 1}) == "(2,1,1)");
    CHECK(to_json_string(Partition{3, 1}) == "[3,1]");
    CHECK(parse_partition("3,1") == Partition{3, 1});
    CHECK_THROWS_AS(parse_partition("1,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,1a"), std::invalid_argument);
}

}

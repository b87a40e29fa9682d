#include <catch2/catch_amalgamated.hpp>

#include "navlab/partition.hpp"

using namespace navlab;

TEST_CASE("partition validation and canonical form", "[partition]") {
    CHECK(Partition{}.n() == 0);
    CHECK(Partition{}.empty());
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));  // trailing zeros stripped
    CHECK(Partition{4, 2, 1}.n() == 7);
    CHECK(Partition{4, 2, 1}.rows() == 3);
    CHECK(Partition{4, 2, 1}.row(2) == 2);
    CHECK(Partition{4, 2, 1}.row(5) == 0);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0, 1}), std::invalid_argument);
}

TEST_CASE("conjugate transposes the diagram", "[partition]") {
    CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition{2, 1}) == Partition{2, 1});
    CHECK(is_self_conjugate(Partition{2, 2}));
    CHECK_FALSE(is_self_conjugate(Partition{3, 1}));
    for (int n = 0; n <= 10; ++n)
        for (const auto& lam : enumerate_partitions(n))
            CHECK(conjugate(conjugate(lam)) == lam);
}

TEST_CASE("hook arms, legs and lengths", "[partition]") {
    CHECK(hook_at(Partition{2, 1}, 1, 1).length() == 3);
    CHECK(hook_at(Partition{4, 2, 1}, 1, 1).length() == 6);
    CHECK(hook_at(Partition{7}, 1, 1).length() == 7);
    const Hook h = hook_at(Partition{4, 2, 1}, 1, 2);
    CHECK(h.arm == 2);
    CHECK(h.leg == 1);
    CHECK(h.length() == 4);
    CHECK_THROWS_AS(hook_at(Partition{2, 1}, 2, 2), std::domain_error);
    CHECK_THROWS_AS(hook_at(Partition{2, 1}, 0, 1), std::domain_error);
    CHECK_THROWS_AS(hook_at(Partition{}, 1, 1), std::domain_error);
}

TEST_CASE("diagonal hooks", "[partition]") {
    CHECK(diagonal_hooks(Partition{2, 1}) == std::vector<int>{3});
    CHECK(diagonal_hooks(Partition{3, 1, 1}) == std::vector<int>{5});
    CHECK(diagonal_hooks(Partition{4, 3, 2, 1}) == std::vector<int>{7, 3});
    CHECK(diagonal_hooks(Partition{}).empty());
    // for self-conjugate shapes the diagonal hooks are odd and strictly decreasing
    for (int n = 0; n <= 15; ++n)
        for (const auto& lam : enumerate_self_conjugate(n)) {
            const auto d = diagonal_hooks(lam);
            int prev = 1 << 20;
            int total = 0;
            for (int h : d) {
                CHECK(h % 2 == 1);
                CHECK(h < prev);
                prev = h;
                total += h;
            }
            CHECK(total == n);
        }
}

TEST_CASE("beta sets", "[partition]") {
    CHECK(beta_set(Partition{2, 1}, 3).entries == std::vector<int>{4, 2, 0});
    CHECK(beta_set(Partition{}, 3).entries == std::vector<int>{2, 1, 0});
    CHECK(beta_set(Partition{4, 2, 1}, 3).entries == std::vector<int>{6, 3, 1});
    CHECK_THROWS_AS(beta_set(Partition{4, 2, 1}, 2), std::domain_error);
    for (int n = 0; n <= 10; ++n)
        for (const auto& lam : enumerate_partitions(n))
            CHECK(partition_from_beta(beta_set(lam, lam.rows() + 2).entries) == lam);
}

TEST_CASE("partition enumeration is complete, ordered and duplicate-free", "[partition]") {
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(4).front() == Partition{4});
    CHECK(enumerate_partitions(4).back() == Partition{1, 1, 1, 1});
    CHECK(enumerate_partitions(10).size() == 42);
    CHECK(enumerate_partitions(20).size() == 627);
    const auto all = enumerate_partitions(9);
    for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i] > all[i + 1]);

    CHECK(enumerate_self_conjugate(5) == std::vector<Partition>{Partition{3, 1, 1}});
    CHECK(enumerate_self_conjugate(0) == std::vector<Partition>{Partition{}});
    CHECK(enumerate_self_conjugate(2).empty());
    // self-conjugate partitions match partitions into distinct odd parts
    const int distinct_odd_counts[] = {1, 1, 0, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 4};
    for (int n = 0; n <= 15; ++n)
        CHECK(static_cast<int>(enumerate_self_conjugate(n).size()) == distinct_odd_counts[n]);
}

TEST_CASE("hook length formula degrees", "[partition]") {
    CHECK(degree(Partition{2, 1}) == 2);
    CHECK(degree(Partition{9}) == 1);
    CHECK(degree(Partition{2, 2, 2}) == 5);
    CHECK(degree(Partition{4, 2, 1}) == 35);
    CHECK(degree(Partition{}) == 1);
    // sum of squared degrees is n!
    for (int n = 0; n <= 8; ++n) {
        BigInt sum = 0;
        for (const auto& lam : enumerate_partitions(n)) sum += degree(lam) * degree(lam);
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("p-valuation of the degree", "[partition]") {
    CHECK(p_valuation_of_degree(Partition{2, 1}, 3) == 0);
    CHECK(p_valuation_of_degree(Partition{3, 2}, 5) == 1);  // degree 5
    CHECK(p_valuation_of_degree(Partition{2, 2, 2}, 3) == 0);
    for (int n = 0; n <= 9; ++n)
        for (const auto& lam : enumerate_partitions(n))
            for (int p : {3, 5, 7}) {
                BigInt d = degree(lam);
                int v = 0;
                while (d % p == 0) {
                    d /= p;
                    ++v;
                }
                CHECK(p_valuation_of_degree(lam, p) == v);
            }
}

TEST_CASE("multinomial coefficients", "[partition]") {
    CHECK(multinomial(2, {1, 1, 0}) == 2);
    CHECK(multinomial(6, {3, 2, 1}) == 60);
    CHECK(multinomial(0, {0, 0}) == 1);
    CHECK_THROWS_AS(multinomial(3, {1, 1}), std::domain_error);
}

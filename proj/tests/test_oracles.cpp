#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "navlab/correspondence.hpp"
#include "navlab/oracles.hpp"

using namespace navlab;
using namespace navlab::oracles;

TEST_CASE("border strip removal", "[oracles]") {
    const auto whole = remove_border_strip(Partition{2, 1}, 1, 3);
    REQUIRE(whole.has_value());
    CHECK(whole->first == Partition{});
    CHECK(whole->second == 2);  // spans two rows

    const auto domino = remove_border_strip(Partition{2, 2}, 1, 2);
    REQUIRE(domino.has_value());
    CHECK(domino->first == Partition{1, 1});

    CHECK_FALSE(remove_border_strip(Partition{3, 1}, 1, 3).has_value());
    CHECK_FALSE(remove_border_strip(Partition{2, 1}, 3, 1).has_value());
    CHECK_FALSE(remove_border_strip(Partition{1}, 1, 2).has_value());
}

TEST_CASE("Murnaghan-Nakayama values", "[oracles]") {
    CHECK(mn_value(Partition{2, 1}, Partition{3}) == -1);
    CHECK(mn_value(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(mn_value(Partition{2, 1}, Partition{2, 1}) == 0);
    CHECK_THROWS_AS(mn_value(Partition{2, 1}, Partition{2}), std::domain_error);

    // the trivial character is 1 everywhere
    for (const auto& rho : enumerate_partitions(6)) CHECK(mn_value(Partition{6}, rho) == 1);
    // identity column equals the hook length degree
    for (int n = 0; n <= 10; ++n) {
        std::vector<int> ones(n, 1);
        for (const auto& lam : enumerate_partitions(n))
            CHECK(BigInt(mn_value(lam, Partition(ones))) == degree(lam));
    }
    // conjugating the label twists by the sign of the class
    for (int n = 2; n <= 8; ++n)
        for (const auto& lam : enumerate_partitions(n))
            for (const auto& rho : enumerate_partitions(n)) {
                const int sign = (n - rho.rows()) % 2 == 0 ? 1 : -1;
                CHECK(mn_value(conjugate(lam), rho) == sign * mn_value(lam, rho));
            }
    // on its own splitting class a self-conjugate label takes the value epsilon
    for (int n = 1; n <= 10; ++n)
        for (const auto& lam : enumerate_self_conjugate(n))
            CHECK(mn_value(lam, Partition(diagonal_hooks(lam))) == epsilon_lambda(lam));
}

TEST_CASE("border-strip core/quotient oracle agrees with the abacus", "[oracles]") {
    const auto cq = rim_hook_core_quotient(Partition{2, 1}, 3);
    CHECK(cq.core == Partition{});
    CHECK(cq.quotient == std::vector<Partition>{Partition{}, Partition{1}, Partition{}});

    const auto cq2 = rim_hook_core_quotient(Partition{4, 2, 1}, 3);
    CHECK(cq2.core == Partition{1});
    CHECK(cq2.weight() == 2);
    CHECK(cq2.quotient == std::vector<Partition>{Partition{1, 1}, Partition{}, Partition{}});

    CHECK(rim_hook_core_quotient(Partition{1, 1}, 3).core == Partition{1, 1});

    for (int n = 0; n <= 12; ++n)
        for (const auto& lam : enumerate_partitions(n))
            for (int p : {3, 5, 7}) {
                const auto a = core_quotient(lam, p);
                const auto b = rim_hook_core_quotient(lam, p);
                CHECK(a.core == b.core);
                CHECK(a.quotient == b.quotient);
            }
}

TEST_CASE("alternating tables at desk scale", "[oracles]") {
    const auto t3 = alt_table(3);
    REQUIRE(t3.rows.size() == 3);
    REQUIRE(t3.classes.size() == 3);
    CHECK(t3.group_order == 3);
    for (std::size_t r = 0; r < 3; ++r) CHECK(t3.row_degree(static_cast<int>(r)) == 1);

    // cube root entries at n = 3: (-1 +- sqrt(-3))/2 on the two 3-cycle classes
    bool seen_omega = false;
    for (std::size_t r = 0; r < t3.rows.size(); ++r)
        for (std::size_t c = 0; c < t3.classes.size(); ++c)
            if (t3.values[r][c] == QuadraticValue::half(-1, 1, -3)) seen_omega = true;
    CHECK(seen_omega);

    const auto t2 = alt_table(2);
    REQUIRE(t2.rows.size() == 1);
    CHECK(t2.values[0][0] == QuadraticValue::integer(1));

    const auto t7 = alt_table(7);
    CHECK(t7.rows.size() == 9);
    CHECK(t7.classes.size() == 9);
    std::multiset<long long> degrees;
    for (std::size_t r = 0; r < t7.rows.size(); ++r)
        degrees.insert(t7.row_degree(static_cast<int>(r)));
    CHECK(degrees == std::multiset<long long>{1, 6, 10, 10, 14, 14, 15, 21, 35});

    CHECK_THROWS_AS(alt_table(8), std::domain_error);
}

TEST_CASE("table orthogonality is exact", "[oracles]") {
    for (int n = 2; n <= 7; ++n) {
        const auto t = alt_table(n);
        CHECK(first_orthogonality(t));
        CHECK(second_orthogonality(t));
    }
}

TEST_CASE("numeric Gauss sum oracle", "[oracles]") {
    for (long long D : {-35LL, -15LL, -3LL, -1LL, 5LL, 21LL, 33LL})
        for (int p : {3, 5, 7}) CHECK(gauss_sum_numeric(GaloisElement(p, 0, 1), D) == 1);
    CHECK(gauss_sum_numeric(GaloisElement(5, 0, 2), 5) == -1);
    CHECK(gauss_sum_numeric(GaloisElement(3, 1, 1), -3) == 1);
    CHECK(gauss_sum_numeric(GaloisElement(3, 0, 2), -3) == -1);
    CHECK_THROWS_AS(gauss_sum_numeric(GaloisElement(3, 0, 1), 45), std::domain_error);

    // spot check agreement with the symbolic rule on a small grid
    for (long long m : {1LL, 3LL, 5LL, 7LL, 15LL, 21LL, 35LL, 105LL})
        for (long long D : {m, -m})
            for (int p : {3, 5})
                for (int e = 0; e <= 3; ++e)
                    for (int k = 1; k < p; ++k) {
                        const GaloisElement sigma(p, e, k);
                        CHECK(gauss_sum_numeric(sigma, D) == galois_sign(sigma, D));
                    }
}

TEST_CASE("brute-force sigma-fixed counts", "[oracles]") {
    CHECK(brute_count_fixed_global(5, 5, GaloisElement(5, 0, 1)) == 4);
    CHECK(brute_count_fixed_global(5, 5, GaloisElement(5, 0, 4)) == 4);
    CHECK(brute_count_fixed_global(5, 5, GaloisElement(5, 0, 2)) == 2);
    CHECK(brute_count_fixed_global(3, 3, GaloisElement(3, 0, 1)) == 3);

    // matches the symbolic count over the whole sigma grid
    for (auto [p, w] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {3, 2}, {7, 1}})
        for (int e = 0; e <= 2; ++e)
            for (int k = 1; k < p; ++k) {
                const GaloisElement sigma(p, e, k);
                CHECK(brute_count_fixed_global(w * p, p, sigma) ==
                      count_sigma_fixed_global(p, w, sigma));
            }
}

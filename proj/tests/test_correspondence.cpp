#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "navlab/correspondence.hpp"

using namespace navlab;

TEST_CASE("label-level block bijection", "[correspondence]") {
    const auto L = fong_map(Partition{2, 1}, 3);
    CHECK(L.core == Partition{});
    CHECK(L.components == std::vector<Partition>{Partition{}, Partition{1}, Partition{}});

    const auto fixed = fong_map(Partition{1, 1}, 3);  // a 3-core: weight zero
    CHECK(fixed.core == Partition{1, 1});
    CHECK(fixed.weight() == 0);

    const auto five = fong_map(Partition{3, 1, 1}, 5);
    CHECK(five.core == Partition{});
    CHECK(five.components[2] == Partition{1});
    CHECK(five.weight() == 1);
}

TEST_CASE("bijectivity onto weight-w labels of the principal block", "[correspondence]") {
    for (int p : {3, 5})
        for (int w = 1; w < p; ++w) {
            std::vector<LocalLabel> image;
            for (const auto& lam : enumerate_partitions(w * p)) {
                if (!macdonald_pprime(lam, p)) continue;
                const auto L = fong_map(lam, p);
                CHECK(L.core == Partition{});
                CHECK(L.weight() == w);
                // the map is inverted by rebuilding from the core and quotient
                CHECK(from_core_quotient(CoreQuotient{p, L.core, L.components}) == lam);
                image.push_back(L);
            }
            std::sort(image.begin(), image.end());
            CHECK(std::adjacent_find(image.begin(), image.end()) == image.end());  // injective
            auto expected = enumerate_local_labels(NormalizerShape(p, 0, w), {});
            std::sort(expected.begin(), expected.end());
            CHECK(image == expected);  // surjective onto the label set
        }
}

TEST_CASE("split labels map to splitting mappings", "[correspondence]") {
    for (int p : {3, 5})
        for (int w = 1; w < p; ++w)
            for (const auto& lam : enumerate_partitions(w * p)) {
                if (!macdonald_pprime(lam, p)) continue;
                CHECK(is_self_conjugate(lam) ==
                      is_splitting_mapping(fong_map(lam, p).components));
            }
}

TEST_CASE("induced map on restrictions", "[correspondence]") {
    const auto nonsplit = restrict_to_alt(Partition{3})[0];
    const auto local = f_plus(nonsplit, 3);
    CHECK(local.kind == RestrictKind::NonSplit);
    CHECK(local.label != local.dual);
    CHECK(dual_label(local.label) == local.dual);
    CHECK(local.label.weight() == 1);

    const auto split = restrict_to_alt(Partition{2, 1});
    const auto lplus = f_plus(split[0], 3);
    CHECK(lplus.kind == RestrictKind::Split);
    CHECK(lplus.sign == +1);
    CHECK(lplus.label.components ==
          std::vector<Partition>{Partition{}, Partition{1}, Partition{}});
    CHECK(f_plus(split[1], 3).sign == -1);

    // weight-zero labels: non-split stays non-split
    const auto cores = restrict_to_alt(Partition{2})[0];  // (2) and (1,1) are 3-cores
    const auto wzero = f_plus(cores, 3);
    CHECK(wzero.kind == RestrictKind::NonSplit);
    CHECK(wzero.label.weight() == 0);
    CHECK(wzero.label.core == Partition{2});
    CHECK(wzero.dual.core == Partition{1, 1});
}

TEST_CASE("p-singular entries", "[correspondence]") {
    const auto e31 = psingular_chars(3, 1);
    REQUIRE(e31.size() == 1);
    CHECK(e31[0].split);
    CHECK(e31[0].lambda == Partition{2, 1});
    CHECK(e31[0].D_global == -3);
    CHECK(e31[0].D_local == -3);

    const auto e51 = psingular_chars(5, 1);
    REQUIRE(e51.size() == 1);
    CHECK(e51[0].split);
    CHECK(e51[0].lambda == Partition{3, 1, 1});
    CHECK(e51[0].D_global == 5);
    CHECK(e51[0].D_local == 5);

    const auto e32 = psingular_chars(3, 2);
    REQUIRE(e32.size() == 1);
    CHECK_FALSE(e32[0].split);
    CHECK(e32[0].lambda == Partition{5, 1});
    CHECK(e32[0].lambda_conj == Partition{2, 1, 1, 1, 1});
    CHECK_FALSE(e32[0].D_global.has_value());

    const auto e76 = psingular_chars(7, 6);
    CHECK(e76.size() == 6);  // five dual pairs and the one self-conjugate component
    CHECK(std::count_if(e76.begin(), e76.end(),
                        [](const auto& e) { return e.split; }) == 1);

    CHECK(psingular_chars(3, 0).empty());
    CHECK_THROWS_AS(psingular_chars(3, 3), std::domain_error);
    CHECK_THROWS_AS(psingular_chars(9, 1), std::domain_error);
}

TEST_CASE("radicand identity", "[correspondence]") {
    CHECK(radicand_identity_check(Partition{2, 1}, 3));
    CHECK(radicand_identity_check(Partition{3, 1, 1}, 5));
    CHECK(radicand_identity_check(Partition{5, 1, 1, 1, 1}, 3));  // middle component (2,1)
    CHECK_THROWS_AS(radicand_identity_check(Partition{3, 1}, 3), std::domain_error);
    CHECK_THROWS_AS(radicand_identity_check(Partition{1}, 3), std::domain_error);
}

TEST_CASE("value-level match of split differences", "[correspondence]") {
    for (int p : {3, 5})
        for (int w = 1; w < p; ++w)
            for (const auto& entry : psingular_chars(p, w)) {
                if (!entry.split) continue;
                CHECK(split_difference_value(entry.lambda) ==
                      local_difference_value(entry.Lambda.components, p));
                CHECK(entry.D_global == entry.D_local);
            }
}

TEST_CASE("commutation with the Galois action", "[correspondence]") {
    for (int e = 0; e <= 2; ++e)
        for (int k = 1; k < 3; ++k)
            CHECK(verify_commutation(3, 1, GaloisElement(3, e, k)).pass);

    const auto swapped = verify_commutation(5, 1, GaloisElement(5, 0, 2));
    CHECK(swapped.pass);
    REQUIRE(swapped.entries.size() == 1);
    CHECK(swapped.entries[0].status == PairAction::Swapped);
    CHECK(swapped.entries[0].pass);

    const auto big = verify_commutation(7, 6, GaloisElement(7, 1, 3));
    CHECK(big.pass);
    CHECK(big.entries.size() == 6);
}

TEST_CASE("height-zero counts agree", "[correspondence]") {
    const auto c31 = mckay_count(3, 1);
    CHECK(c31.global_count == 3);
    CHECK(c31.local_count == 3);
    CHECK(c31.equal);

    const auto c51 = mckay_count(5, 1);
    CHECK(c51.global_count == 4);
    CHECK(c51.equal);

    const auto c32 = mckay_count(3, 2);
    CHECK(c32.global_count == 6);
    CHECK(c32.equal);

    const auto c71 = mckay_count(7, 1);
    CHECK(c71.global_count == 5);
    CHECK(c71.equal);

    CHECK_THROWS_AS(mckay_count(3, 3), std::domain_error);
}

TEST_CASE("sigma-fixed p-singular counts agree", "[correspondence]") {
    const auto swapped = navarro_count_psingular(5, 1, GaloisElement(5, 0, 2));
    CHECK(swapped.global_fixed == 0);
    CHECK(swapped.local_fixed == 0);
    CHECK(swapped.equal);

    const auto fixed = navarro_count_psingular(5, 1, GaloisElement(5, 0, 1));
    CHECK(fixed.global_fixed == 2);
    CHECK(fixed.equal);

    const auto e1 = navarro_count_psingular(3, 1, GaloisElement(3, 1, 1));
    CHECK(e1.global_fixed == 2);
    CHECK(e1.local_fixed == 2);

    // the non-split entry of (3,2) is fixed on both sides for every sigma
    for (int e = 0; e <= 2; ++e)
        for (int k = 1; k < 3; ++k) {
            const auto nc = navarro_count_psingular(3, 2, GaloisElement(3, e, k));
            CHECK(nc.global_fixed == 1);
            CHECK(nc.local_fixed == 1);
        }
}

#include "kgfca/error.hpp"
#include "kgfca/pac.hpp"

#include "../support/fixtures.hpp"
#include "../support/naive.hpp"

#include <doctest.h>

using namespace kgfca;
namespace kt = kgfca::testing;

TEST_CASE("pac learning recovers the family base exactly") {
    FormalContext k = kt::family_table();
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        PacParams params{0.01, 0.01, seed};
        PacRunInfo info;
        ImplicationBase base = pac_basis(k, params, &info);
        REQUIRE(base.implications.size() == 1);
        CHECK(base.implications[0].premise == Bitset(3));
        CHECK(base.implications[0].conclusion == Bitset::of(3, {2}));
        CHECK(horn_distance(base, k) == 0.0);
        CHECK(info.equivalence_checks >= 1);
    }
}

TEST_CASE("pac learning on degenerate contexts") {
    SUBCASE("zero attributes") {
        FormalContext k;
        k.objects = {"g0"};
        k.rows = {Bitset(0)};
        ImplicationBase base = pac_basis(k, PacParams{0.1, 0.1, 1});
        CHECK(base.implications.empty());
    }
    SUBCASE("the full context closes the empty set to M") {
        FormalContext k = kt::full_context(3, 4);
        ImplicationBase base = pac_basis(k, PacParams{0.1, 0.1, 7});
        CHECK(lin_closure(base, Bitset(4)) == Bitset::full(4));
        CHECK(horn_distance(base, k) == 0.0);
    }
}

TEST_CASE("pac runs are deterministic per seed") {
    std::mt19937_64 rng(83);
    FormalContext k = kt::random_context(rng, 10, 6);
    PacParams params{0.2, 0.1, 12345};
    PacRunInfo first_info, second_info;
    ImplicationBase first = pac_basis(k, params, &first_info);
    ImplicationBase second = pac_basis(k, params, &second_info);
    REQUIRE(first.implications.size() == second.implications.size());
    for (std::size_t i = 0; i < first.implications.size(); ++i)
        CHECK(first.implications[i] == second.implications[i]);
    CHECK(first_info.samples_drawn == second_info.samples_drawn);
    CHECK(first_info.equivalence_checks == second_info.equivalence_checks);
}

TEST_CASE("every emitted implication is valid in the context") {
    std::mt19937_64 rng(89);
    for (int round = 0; round < 40; ++round) {
        FormalContext k = kt::random_context(rng, 10, 6);
        ImplicationBase base = pac_basis(k, PacParams{0.25, 0.2, rng()});
        for (const Implication& imp : base.implications) CHECK(is_valid(k, imp));
    }
}

TEST_CASE("parameters are validated") {
    FormalContext k = kt::family_table();
    CHECK_THROWS_AS(pac_basis(k, PacParams{0.0, 0.1, 1}), ValidationError);
    CHECK_THROWS_AS(pac_basis(k, PacParams{0.1, 0.0, 1}), ValidationError);
    CHECK_THROWS_AS(pac_basis(k, PacParams{1.5, 0.1, 1}), ValidationError);
}

TEST_CASE("horn distance") {
    FormalContext k = kt::family_table();

    SUBCASE("zero for the canonical base") {
        CHECK(horn_distance(canonical_base(k), k) == 0.0);
    }
    SUBCASE("the empty base misses the subsets without mother") {
        CHECK(horn_distance(ImplicationBase{3, {}}, k) == doctest::Approx(0.5));
    }
    SUBCASE("an overshooting base disagrees wherever the closure is not M") {
        // two objects: {a}, {a,b}; true closures: {}->{a}, {a}->{a}, {b},{a,b}->{a,b}
        FormalContext two;
        two.objects = {"g0", "g1"};
        two.attributes = {"a", "b"};
        two.rows = {Bitset::of(2, {0}), Bitset::of(2, {0, 1})};
        ImplicationBase everything{2, {Implication{Bitset(2), Bitset::full(2)}}};
        CHECK(horn_distance(everything, two) == doctest::Approx(0.5));
    }
    SUBCASE("the exact-mode cap is enforced") {
        CHECK_THROWS_AS(horn_distance(ImplicationBase{23, {}}, kt::full_context(1, 23), 21),
                        ValidationError);
    }
    SUBCASE("the sampling estimator brackets the exact value") {
        ImplicationBase empty{3, {}};
        auto estimate = horn_distance_estimate(empty, k, 4000, 99);
        CHECK(estimate.estimate == doctest::Approx(0.5).epsilon(0.1));
        CHECK(estimate.std_error > 0.0);
        CHECK(estimate.samples == 4000);
    }
}

TEST_CASE("canonical bases of random contexts have distance zero") {
    std::mt19937_64 rng(97);
    for (int round = 0; round < 30; ++round) {
        FormalContext k = kt::random_context(rng, 9, 7);
        CHECK(horn_distance(canonical_base(k), k) == 0.0);
    }
}

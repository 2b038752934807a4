#include "kgfca/assoc_rules.hpp"
#include "kgfca/error.hpp"

#include "../support/fixtures.hpp"
#include "../support/naive.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

using namespace kgfca;
namespace kt = kgfca::testing;
using kt::IndexSet;
using kt::to_index_set;

namespace {

std::set<std::pair<IndexSet, std::size_t>> node_set(const IcebergLattice& lattice) {
    std::set<std::pair<IndexSet, std::size_t>> out;
    for (const auto& node : lattice.nodes) out.emplace(to_index_set(node.intent), node.support_count);
    return out;
}

struct RuleKey {
    IndexSet premise, conclusion;
    std::size_t rule_count, premise_count;
    auto operator<=>(const RuleKey&) const = default;
};

std::set<RuleKey> rule_set(const std::vector<AssociationRule>& rules) {
    std::set<RuleKey> out;
    for (const auto& r : rules)
        out.insert(RuleKey{to_index_set(r.premise), to_index_set(r.conclusion), r.rule_count,
                           r.premise_count});
    return out;
}

std::set<RuleKey> rule_set(const std::vector<kt::NaiveRule>& rules) {
    std::set<RuleKey> out;
    for (const auto& r : rules)
        out.insert(RuleKey{r.premise, r.conclusion, r.rule_count, r.premise_count});
    return out;
}

} // namespace

TEST_CASE("frequent closed sets of the family table") {
    FormalContext k = kt::family_table(); // attributes godparent(0) isMother(1) mother(2)

    SUBCASE("minsupp 0.25 keeps all four closed sets") {
        IcebergLattice lattice = frequent_closed(k, 0.25);
        REQUIRE(lattice.nodes.size() == 4);
        std::set<std::pair<IndexSet, std::size_t>> expected = {
            {{2}, 4},       // {mother}
            {{1, 2}, 3},    // {isMother, mother}
            {{0, 2}, 3},    // {godparent, mother}
            {{0, 1, 2}, 2}, // all three
        };
        CHECK(node_set(lattice) == expected);
        CHECK(lattice.covers.size() == 4);
        // nodes in lectic order
        for (std::size_t i = 0; i + 1 < lattice.nodes.size(); ++i)
            CHECK(lectic_less(lattice.nodes[i].intent, lattice.nodes[i + 1].intent));
        // cover edges are strict subsets
        for (const auto& [lower, upper] : lattice.covers) {
            CHECK(lattice.nodes[lower].intent.subset_of(lattice.nodes[upper].intent));
            CHECK(lattice.nodes[lower].intent != lattice.nodes[upper].intent);
        }
    }

    SUBCASE("minsupp 0 keeps exactly the concept intents") {
        IcebergLattice lattice = frequent_closed(k, 0.0);
        auto all = concepts(k);
        REQUIRE(lattice.nodes.size() == all.size());
        for (std::size_t i = 0; i < all.size(); ++i)
            CHECK(lattice.nodes[i].intent == all[i].intent);
    }

    SUBCASE("minsupp 1 keeps only the closure of the empty set") {
        IcebergLattice lattice = frequent_closed(k, 1.0);
        REQUIRE(lattice.nodes.size() == 1);
        CHECK(to_index_set(lattice.nodes[0].intent) == IndexSet{2});
    }

    SUBCASE("minsupp above 1 keeps nothing") {
        CHECK(frequent_closed(k, 1.01).nodes.empty());
    }
}

TEST_CASE("luxenburger base of the family table") {
    FormalContext k = kt::family_table();

    SUBCASE("0.25 / 0.6 yields the four cover rules in report order") {
        auto rules = luxenburger_base(k, 0.25, 0.6);
        REQUIRE(rules.size() == 4);

        // {mother} -> {isMother}: supp 3/4, conf 3/4
        CHECK(to_index_set(rules[0].premise) == IndexSet{2});
        CHECK(to_index_set(rules[0].conclusion) == IndexSet{1});
        CHECK(rules[0].rule_count == 3);
        CHECK(rules[0].premise_count == 4);
        CHECK(rules[0].support() == doctest::Approx(0.75));
        CHECK(rules[0].confidence() == doctest::Approx(0.75));

        // {mother} -> {godparent}: supp 3/4, conf 3/4
        CHECK(to_index_set(rules[1].premise) == IndexSet{2});
        CHECK(to_index_set(rules[1].conclusion) == IndexSet{0});
        CHECK(rules[1].rule_count == 3);

        // {isMother, mother} -> {godparent}: supp 2/4, conf 2/3
        CHECK(to_index_set(rules[2].premise) == IndexSet{1, 2});
        CHECK(to_index_set(rules[2].conclusion) == IndexSet{0});
        CHECK(rules[2].rule_count == 2);
        CHECK(rules[2].premise_count == 3);
        CHECK(rules[2].confidence() == doctest::Approx(2.0 / 3.0));

        // {godparent, mother} -> {isMother}: supp 2/4, conf 2/3
        CHECK(to_index_set(rules[3].premise) == IndexSet{0, 2});
        CHECK(to_index_set(rules[3].conclusion) == IndexSet{1});
        CHECK(rules[3].rule_count == 2);
        CHECK(rules[3].premise_count == 3);
    }

    SUBCASE("minconf 1 keeps no family rule") {
        CHECK(luxenburger_base(k, 0.25, 1.0).empty());
    }

    SUBCASE("the empty context yields no rules") {
        CHECK(luxenburger_base(FormalContext{}, 0.0, 0.0).empty());
    }

    SUBCASE("minsupp 0, minconf 0 emits every cover rule") {
        auto rules = luxenburger_base(k, 0.0, 0.0);
        IcebergLattice lattice = frequent_closed(k, 0.0);
        CHECK(rules.size() == lattice.covers.size());
    }
}

TEST_CASE("confidence") {
    FormalContext k = kt::family_table();
    Bitset is_mother = Bitset::of(3, {1});
    Bitset godparent = Bitset::of(3, {0});

    CHECK(confidence(k, is_mother, godparent) == doctest::Approx(2.0 / 3.0));
    CHECK(confidence(k, is_mother, Bitset(3)) == 1.0);
    // a valid implication has confidence 1
    CHECK(confidence(k, Bitset(3), Bitset::of(3, {2})) == 1.0);

    FormalContext disjoint;
    disjoint.objects = {"g0"};
    disjoint.attributes = {"m0", "m1"};
    disjoint.rows = {Bitset::of(2, {0})};
    CHECK_THROWS_AS(confidence(disjoint, Bitset::of(2, {1}), Bitset::of(2, {0})),
                    ValidationError);
}

TEST_CASE("the exhaustive rule oracle") {
    FormalContext k = kt::family_table();

    SUBCASE("includes {mother} -> {isMother} at 0.25/0.6") {
        auto rules = all_association_rules_oracle(k, 0.25, 0.6);
        bool found = false;
        for (const auto& r : rules)
            if (to_index_set(r.premise) == IndexSet{2} && to_index_set(r.conclusion) == IndexSet{1})
                found = r.confidence() == doctest::Approx(0.75);
        CHECK(found);
    }
    SUBCASE("impossible thresholds yield nothing") {
        CHECK(all_association_rules_oracle(k, 0.25, 1.01).empty());
        CHECK(all_association_rules_oracle(k, 1.01, 0.5).empty());
    }
    SUBCASE("the attribute cap is enforced") {
        CHECK_THROWS_AS(all_association_rules_oracle(kt::full_context(1, 13), 0.0, 0.0),
                        ValidationError);
    }
}

TEST_CASE("mined structure matches brute force on random contexts") {
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> threshold(0.0, 1.0);
    for (int round = 0; round < 60; ++round) {
        FormalContext k = kt::random_context(rng, 10, 8);
        double minsupp = threshold(rng) * 0.6;
        double minconf = threshold(rng);

        IcebergLattice lattice = frequent_closed(k, minsupp);
        auto naive_nodes = kt::naive_frequent_closed(k, minsupp);
        std::set<std::pair<IndexSet, std::size_t>> expected(naive_nodes.begin(),
                                                            naive_nodes.end());
        CHECK(node_set(lattice) == expected);

        auto rules = luxenburger_base(lattice, minconf);
        CHECK(rule_set(rules) == rule_set(kt::naive_luxenburger(k, minsupp, minconf)));

        // every reported metric recomputes from the context
        DerivationKernel kernel(k);
        for (const auto& r : rules) {
            CHECK(r.object_count == k.objects.size());
            CHECK(r.rule_count == kernel.extent(r.premise | r.conclusion).count());
            CHECK(r.premise_count == kernel.extent(r.premise).count());
        }
    }
}

TEST_CASE("confidence multiplies along cover chains") {
    std::mt19937_64 rng(71);
    for (int round = 0; round < 30; ++round) {
        FormalContext k = kt::random_context(rng, 10, 6);
        IcebergLattice lattice = frequent_closed(k, 0.0);
        // adjacency over covers
        std::map<std::size_t, std::vector<std::size_t>> up;
        for (const auto& [lower, upper] : lattice.covers) up[lower].push_back(upper);
        for (const auto& [b1, uppers] : up) {
            for (std::size_t b2 : uppers) {
                for (std::size_t b3 : up[b2]) {
                    if (lattice.nodes[b1].support_count == 0) continue;
                    double direct = static_cast<double>(lattice.nodes[b3].support_count) /
                                    static_cast<double>(lattice.nodes[b1].support_count);
                    double chained = (static_cast<double>(lattice.nodes[b2].support_count) /
                                      static_cast<double>(lattice.nodes[b1].support_count)) *
                                     (static_cast<double>(lattice.nodes[b3].support_count) /
                                      static_cast<double>(lattice.nodes[b2].support_count));
                    CHECK(direct == doctest::Approx(chained));
                }
            }
        }
    }
}

TEST_CASE("raising thresholds never adds rules") {
    std::mt19937_64 rng(73);
    for (int round = 0; round < 30; ++round) {
        FormalContext k = kt::random_context(rng, 10, 6);
        double s1 = 0.1, s2 = 0.3, c1 = 0.4, c2 = 0.7;
        auto low = rule_set(luxenburger_base(k, s1, c1));
        auto high_supp = rule_set(luxenburger_base(k, s2, c1));
        auto high_conf = rule_set(luxenburger_base(k, s1, c2));
        CHECK(std::includes(low.begin(), low.end(), high_supp.begin(), high_supp.end()));
        CHECK(std::includes(low.begin(), low.end(), high_conf.begin(), high_conf.end()));
    }
}

TEST_CASE("every oracle rule reconstructs from the canonical base and the iceberg lattice") {
    std::mt19937_64 rng(79);
    for (int round = 0; round < 25; ++round) {
        FormalContext k = kt::random_context(rng, 9, 6);
        if (k.objects.empty()) continue;
        const double minsupp = 0.15, minconf = 0.5;

        ImplicationBase base = canonical_base(k);
        IcebergLattice lattice = frequent_closed(k, minsupp);
        std::map<IndexSet, std::size_t> node_of;
        for (std::size_t i = 0; i < lattice.nodes.size(); ++i)
            node_of[to_index_set(lattice.nodes[i].intent)] = i;
        std::map<std::size_t, std::vector<std::size_t>> up;
        for (const auto& [lower, upper] : lattice.covers) up[lower].push_back(upper);

        DerivationKernel kernel(k);
        for (const AssociationRule& rule : all_association_rules_oracle(k, minsupp, minconf)) {
            // close the premise via the canonical base: that is the start node
            Bitset b1 = lin_closure(base, rule.premise);
            CHECK(b1 == kernel.closure(rule.premise));
            Bitset b2 = kernel.closure(rule.premise | rule.conclusion);
            auto it1 = node_of.find(to_index_set(b1));
            auto it2 = node_of.find(to_index_set(b2));
            REQUIRE(it1 != node_of.end());
            REQUIRE(it2 != node_of.end());

            // walk the covers from b1 to b2, multiplying confidences; every
            // edge en route has confidence >= the rule's, so it is in the base
            std::size_t target = it2->second;
            std::vector<std::pair<std::size_t, double>> frontier = {{it1->second, 1.0}};
            std::set<std::size_t> seen = {it1->second};
            double product = -1.0;
            while (!frontier.empty()) {
                auto [node, conf] = frontier.back();
                frontier.pop_back();
                if (node == target) {
                    product = conf;
                    break;
                }
                for (std::size_t next : up[node]) {
                    if (!lattice.nodes[next].intent.subset_of(lattice.nodes[target].intent))
                        continue;
                    if (seen.insert(next).second) {
                        double edge = static_cast<double>(lattice.nodes[next].support_count) /
                                      static_cast<double>(lattice.nodes[node].support_count);
                        CHECK(edge >= minconf);
                        frontier.emplace_back(next, conf * edge);
                    }
                }
            }
            REQUIRE(product >= 0.0);
            CHECK(product == doctest::Approx(rule.confidence()));
            CHECK(lattice.nodes[target].support_count == rule.rule_count);
        }
    }
}

#include "kgfca/assoc_rules.hpp"
#include "kgfca/error.hpp"
#include "kgfca/fca.hpp"
#include "kgfca/rule_io.hpp"

#include "../support/fixtures.hpp"

#include <doctest.h>

#include <sstream>

using namespace kgfca;
namespace kt = kgfca::testing;

namespace {

NamedBase family_base() {
    FormalContext k = kt::family_table();
    ImplicationBase base = canonical_base(k);
    NamedBase named;
    named.attributes = k.attributes;
    named.implications = base.implications;
    named.object_count = k.objects.size();
    DerivationKernel kernel(k);
    for (const Implication& imp : base.implications)
        named.support_counts.push_back(kernel.extent(imp.premise).count());
    return named;
}

} // namespace

TEST_CASE("implication text serialization") {
    NamedBase named = family_base();
    std::ostringstream out;
    write_rules_text(named, out);
    CHECK(out.str() == "-> mother ; supp=4/4\n");

    SUBCASE("round trip is byte identical") {
        std::istringstream in(out.str());
        NamedBase reread = read_rules_text(in);
        std::ostringstream again;
        write_rules_text(reread, again);
        CHECK(again.str() == out.str());
        CHECK(reread.object_count == 4);
        REQUIRE(reread.support_counts.size() == 1);
        CHECK(reread.support_counts[0] == 4);
    }

    SUBCASE("premises print before the arrow") {
        NamedBase base;
        base.attributes = {"a", "b", "c"};
        base.implications = {Implication{Bitset::of(3, {0, 1}), Bitset::of(3, {0, 1, 2})}};
        std::ostringstream text;
        write_rules_text(base, text);
        CHECK(text.str() == "a,b -> c\n");
        std::istringstream in(text.str());
        NamedBase reread = read_rules_text(in);
        REQUIRE(reread.implications.size() == 1);
        // conclusions absorb the premise on read
        CHECK(reread.implications[0].conclusion == Bitset::of(3, {0, 1, 2}));
    }
}

TEST_CASE("implication record serialization keeps the attribute universe") {
    NamedBase named = family_base();
    std::ostringstream out;
    write_rules_records(named, out);
    std::istringstream in(out.str());
    NamedBase reread = read_rules_records(in);
    CHECK(reread.attributes == named.attributes);
    CHECK(reread.object_count == 4);
    REQUIRE(reread.implications.size() == 1);
    CHECK(reread.implications[0].premise == Bitset(3));
    std::ostringstream again;
    write_rules_records(reread, again);
    CHECK(again.str() == out.str());

    SUBCASE("a header is required") {
        std::istringstream missing("{\"premise\":[],\"conclusion\":[\"m\"]}\n");
        CHECK_THROWS_AS(read_rules_records(missing), ParseError);
    }
}

TEST_CASE("association rule serialization") {
    FormalContext k = kt::family_table();
    NamedRules rules;
    rules.attributes = k.attributes;
    rules.object_count = k.objects.size();
    rules.rules = luxenburger_base(k, 0.25, 0.6);

    std::ostringstream text;
    write_assoc_rules_text(rules, text);
    CHECK(text.str() == "mother -> isMother ; supp=3/4 conf=3/4\n"
                        "mother -> godparent ; supp=3/4 conf=3/4\n"
                        "isMother,mother -> godparent ; supp=2/4 conf=2/3\n"
                        "godparent,mother -> isMother ; supp=2/4 conf=2/3\n");

    SUBCASE("text round trip") {
        std::istringstream in(text.str());
        NamedRules reread = read_assoc_rules_text(in);
        std::ostringstream again;
        write_assoc_rules_text(reread, again);
        CHECK(again.str() == text.str());
    }
    SUBCASE("record round trip") {
        std::ostringstream records;
        write_assoc_rules_records(rules, records);
        std::istringstream in(records.str());
        NamedRules reread = read_assoc_rules_records(in);
        std::ostringstream again;
        write_assoc_rules_records(reread, again);
        CHECK(again.str() == records.str());
        REQUIRE(reread.rules.size() == 4);
        CHECK(reread.rules[0].confidence() == doctest::Approx(0.75));
    }
}

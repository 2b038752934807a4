#include "kgfca/data_value.hpp"
#include "kgfca/entity.hpp"
#include "kgfca/statement.hpp"

#include <doctest.h>

using namespace kgfca;

TEST_CASE("entity ids parse and print canonically") {
    auto q = EntityId::parse("Q34851");
    REQUIRE(q.has_value());
    CHECK(q->is_item());
    CHECK(q->number == 34851);
    CHECK(q->to_string() == "Q34851");

    auto p = EntityId::parse("P26");
    REQUIRE(p.has_value());
    CHECK(p->is_property());
    CHECK(p->to_string() == "P26");

    CHECK_FALSE(EntityId::parse("Q0").has_value());
    CHECK_FALSE(EntityId::parse("L123").has_value());
    CHECK_FALSE(EntityId::parse("Q").has_value());
    CHECK_FALSE(EntityId::parse("Q12x").has_value());
    CHECK_FALSE(EntityId::parse("").has_value());
    CHECK_FALSE(EntityId::parse("26").has_value());
}

TEST_CASE("decimal normalization yields shortest exact form") {
    CHECK(normalize_decimal("+736414") == "736414");
    CHECK(normalize_decimal("-1.50") == "-1.5");
    CHECK(normalize_decimal("0.000") == "0");
    CHECK(normalize_decimal("-0") == "0");
    CHECK(normalize_decimal("-0.0") == "0");
    CHECK(normalize_decimal("007") == "7");
    CHECK(normalize_decimal("+0.25") == "0.25");
    CHECK(normalize_decimal("10.") == "10");
}

TEST_CASE("time values truncate to their precision") {
    auto year = TimeValue::parse_timestamp("+1964-00-00T00:00:00Z", 9);
    REQUIRE(year.has_value());
    CHECK(DataValue::time(*year).canonical() == "+1964");

    auto day = TimeValue::parse_timestamp("+2006-09-13T00:00:00Z", 11);
    REQUIRE(day.has_value());
    CHECK(DataValue::time(*day).canonical() == "+2006-09-13");

    auto month = TimeValue::parse_timestamp("+2016-12-31T00:00:00Z", 10);
    REQUIRE(month.has_value());
    CHECK(DataValue::time(*month).canonical() == "+2016-12");

    auto second = TimeValue::parse_timestamp("+2016-12-31T23:59:58Z", 14);
    REQUIRE(second.has_value());
    CHECK(DataValue::time(*second).canonical() == "+2016-12-31T23:59:58Z");

    auto bce = TimeValue::parse_timestamp("-0044-03-15T00:00:00Z", 11);
    REQUIRE(bce.has_value());
    CHECK(DataValue::time(*bce).canonical() == "-0044-03-15");

    // century precision renders like year precision
    auto century = TimeValue::parse_timestamp("+1900-00-00T00:00:00Z", 7);
    REQUIRE(century.has_value());
    CHECK(DataValue::time(*century).canonical() == "+1900");

    CHECK_FALSE(TimeValue::parse_timestamp("1964-00-00T00:00:00Z", 9).has_value());
    CHECK_FALSE(TimeValue::parse_timestamp("+1964", 9).has_value());
}

TEST_CASE("remaining canonical value forms") {
    CHECK(DataValue::entity(EntityId::item(5)).canonical() == "Q5");
    CHECK(DataValue::quantity({"+736414", std::nullopt}).canonical() == "736414");
    CHECK(DataValue::quantity({"2.50", EntityId::item(11573)}).canonical() == "2.5~Q11573");
    CHECK(DataValue::coordinate({50.110556, 8.682222, EntityId::item(2)}).canonical() ==
          "50.110556,8.682222@Q2");
    CHECK(DataValue::coordinate({-0.0, 0.0, EntityId::item(2)}).canonical() ==
          "0.000000,0.000000@Q2");
    CHECK(DataValue::string("hello").canonical() == "hello");
    CHECK(DataValue::uri("https://example.org").canonical() == "https://example.org");
    CHECK(DataValue::monolingual({"Frankfurt", "de"}).canonical() == "Frankfurt@de");
    CHECK(DataValue::some_value().canonical() == "somevalue");
    CHECK(DataValue::no_value().canonical() == "novalue");
}

TEST_CASE("value identity follows tag and canonical text") {
    CHECK(DataValue::string("Q5") != DataValue::entity(EntityId::item(5)));
    // same year, different stored sub-precision fields
    auto a = TimeValue::parse_timestamp("+1964-01-01T00:00:00Z", 9);
    auto b = TimeValue::parse_timestamp("+1964-06-05T00:00:00Z", 9);
    CHECK(DataValue::time(*a) == DataValue::time(*b));
}

TEST_CASE("annotations deduplicate on (property, value)") {
    std::vector<Snak> annotation = {
        {EntityId::property(580), DataValue::time(*TimeValue::parse_timestamp("+1964-00-00T00:00:00Z", 9))},
        {EntityId::property(582), DataValue::time(*TimeValue::parse_timestamp("+1974-00-00T00:00:00Z", 9))},
        {EntityId::property(580), DataValue::time(*TimeValue::parse_timestamp("+1964-00-00T00:00:00Z", 9))},
    };
    normalize_annotation(annotation);
    CHECK(annotation.size() == 2);
    CHECK(annotation[0].property == EntityId::property(580));
    CHECK(annotation[1].property == EntityId::property(582));
}

#pragma once

#include "kgfca/entity.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace kgfca {

enum class ValueTag : std::uint8_t {
    entity,
    quantity,
    time,
    coordinate,
    string,
    monolingual_text,
    uri,
    some_value,
    no_value,
};

struct QuantityValue {
    std::string amount; // decimal text as stored in the dump, sign optional
    std::optional<EntityId> unit;
};

struct TimeValue {
    std::int64_t year = 0;
    std::uint8_t month = 0;
    std::uint8_t day = 0;
    std::uint8_t hour = 0;
    std::uint8_t minute = 0;
    std::uint8_t second = 0;
    // Wikibase precision level: 9 = year, 10 = month, 11 = day, 12..14 =
    // hour/minute/second. Values below 9 render like year precision.
    std::uint8_t precision = 9;

    static std::optional<TimeValue> parse_timestamp(std::string_view iso, int precision);
};

struct CoordinateValue {
    double latitude = 0.0;
    double longitude = 0.0;
    EntityId globe = EntityId::item(2); // Earth unless the dump says otherwise
};

struct MonolingualText {
    std::string text;
    std::string language;
};

// A single value position of a statement or qualifier. some_value and
// no_value carry no payload; they are filtered out before any context is
// built but must survive parsing.
class DataValue {
public:
    DataValue() : payload_(std::monostate{}), tag_(ValueTag::no_value) {}

    static DataValue entity(EntityId id);
    static DataValue quantity(QuantityValue q);
    static DataValue time(TimeValue t);
    static DataValue coordinate(CoordinateValue c);
    static DataValue string(std::string s);
    static DataValue monolingual(MonolingualText m);
    static DataValue uri(std::string u);
    static DataValue some_value();
    static DataValue no_value();

    ValueTag tag() const { return tag_; }
    bool is_special() const { return tag_ == ValueTag::some_value || tag_ == ValueTag::no_value; }

    const EntityId* as_entity() const { return std::get_if<EntityId>(&payload_); }
    const QuantityValue* as_quantity() const { return std::get_if<QuantityValue>(&payload_); }
    const TimeValue* as_time() const { return std::get_if<TimeValue>(&payload_); }
    const CoordinateValue* as_coordinate() const { return std::get_if<CoordinateValue>(&payload_); }
    const MonolingualText* as_monolingual() const { return std::get_if<MonolingualText>(&payload_); }
    // valid for tags string and uri
    const std::string* as_text() const { return std::get_if<std::string>(&payload_); }

    // Total, deterministic text form; the identity used for attribute
    // names, value ordering and deduplication.
    std::string canonical() const;

    bool operator==(const DataValue& other) const;
    bool operator<(const DataValue& other) const;

private:
    std::variant<std::monostate, EntityId, QuantityValue, TimeValue, CoordinateValue,
                 MonolingualText, std::string>
        payload_;
    ValueTag tag_;
};

// Shortest exact decimal form: no '+', no leading zeros, no trailing
// fractional zeros, no bare trailing '.', "-0" folded to "0".
std::string normalize_decimal(std::string_view text);

} // namespace kgfca

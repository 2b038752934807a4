#include "kgfca/data_value.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace kgfca {

namespace {

std::string pad_number(std::uint64_t value, int width) {
    std::string s = std::to_string(value);
    while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
    return s;
}

std::string format_coordinate_part(double v) {
    if (v == 0.0) v = 0.0; // fold -0
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.6f", v);
    return std::string(buf.data());
}

} // namespace

DataValue DataValue::entity(EntityId id) {
    DataValue v;
    v.payload_ = id;
    v.tag_ = ValueTag::entity;
    return v;
}

DataValue DataValue::quantity(QuantityValue q) {
    DataValue v;
    v.payload_ = std::move(q);
    v.tag_ = ValueTag::quantity;
    return v;
}

DataValue DataValue::time(TimeValue t) {
    DataValue v;
    v.payload_ = t;
    v.tag_ = ValueTag::time;
    return v;
}

DataValue DataValue::coordinate(CoordinateValue c) {
    DataValue v;
    v.payload_ = c;
    v.tag_ = ValueTag::coordinate;
    return v;
}

DataValue DataValue::string(std::string s) {
    DataValue v;
    v.payload_ = std::move(s);
    v.tag_ = ValueTag::string;
    return v;
}

DataValue DataValue::monolingual(MonolingualText m) {
    DataValue v;
    v.payload_ = std::move(m);
    v.tag_ = ValueTag::monolingual_text;
    return v;
}

DataValue DataValue::uri(std::string u) {
    DataValue v;
    v.payload_ = std::move(u);
    v.tag_ = ValueTag::uri;
    return v;
}

DataValue DataValue::some_value() {
    DataValue v;
    v.payload_ = std::monostate{};
    v.tag_ = ValueTag::some_value;
    return v;
}

DataValue DataValue::no_value() {
    DataValue v;
    v.payload_ = std::monostate{};
    v.tag_ = ValueTag::no_value;
    return v;
}

std::optional<TimeValue> TimeValue::parse_timestamp(std::string_view iso, int precision) {
    // "+1964-00-00T00:00:00Z"; the year may exceed four digits.
    if (iso.empty() || (iso[0] != '+' && iso[0] != '-')) return std::nullopt;
    if (precision < 0 || precision > 14) return std::nullopt;
    bool negative = iso[0] == '-';
    std::size_t pos = 1;
    std::size_t year_end = iso.find('-', pos);
    if (year_end == std::string_view::npos) return std::nullopt;

    auto parse_part = [&](std::size_t begin, std::size_t len, std::uint64_t& out) {
        if (begin + len > iso.size()) return false;
        out = 0;
        for (std::size_t i = begin; i < begin + len; ++i) {
            char c = iso[i];
            if (c < '0' || c > '9') return false;
            out = out * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return true;
    };

    std::uint64_t year = 0;
    if (year_end == pos) return std::nullopt;
    if (!parse_part(pos, year_end - pos, year)) return std::nullopt;

    std::uint64_t month = 0, day = 0, hour = 0, minute = 0, second = 0;
    std::size_t p = year_end;
    if (!parse_part(p + 1, 2, month)) return std::nullopt;
    p += 3;
    if (p >= iso.size() || iso[p] != '-') return std::nullopt;
    if (!parse_part(p + 1, 2, day)) return std::nullopt;
    p += 3;
    if (p >= iso.size() || iso[p] != 'T') return std::nullopt;
    if (!parse_part(p + 1, 2, hour)) return std::nullopt;
    p += 3;
    if (p >= iso.size() || iso[p] != ':') return std::nullopt;
    if (!parse_part(p + 1, 2, minute)) return std::nullopt;
    p += 3;
    if (p >= iso.size() || iso[p] != ':') return std::nullopt;
    if (!parse_part(p + 1, 2, second)) return std::nullopt;
    p += 3;
    if (p >= iso.size() || iso[p] != 'Z') return std::nullopt;
    if (month > 12 || day > 31 || hour > 23 || minute > 59 || second > 61) return std::nullopt;

    TimeValue t;
    t.year = negative ? -static_cast<std::int64_t>(year) : static_cast<std::int64_t>(year);
    t.month = static_cast<std::uint8_t>(month);
    t.day = static_cast<std::uint8_t>(day);
    t.hour = static_cast<std::uint8_t>(hour);
    t.minute = static_cast<std::uint8_t>(minute);
    t.second = static_cast<std::uint8_t>(second);
    t.precision = static_cast<std::uint8_t>(precision);
    return t;
}

std::string normalize_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s.remove_prefix(1);
    }
    std::string integral, fraction;
    std::size_t dot = s.find('.');
    if (dot == std::string_view::npos) {
        integral = std::string(s);
    } else {
        integral = std::string(s.substr(0, dot));
        fraction = std::string(s.substr(dot + 1));
    }
    // strip leading zeros, keep at least one integral digit
    std::size_t first = integral.find_first_not_of('0');
    integral = first == std::string::npos ? "0" : integral.substr(first);
    // strip trailing fractional zeros
    std::size_t last = fraction.find_last_not_of('0');
    fraction = last == std::string::npos ? "" : fraction.substr(0, last + 1);

    std::string out = integral;
    if (!fraction.empty()) out += "." + fraction;
    if (negative && !(integral == "0" && fraction.empty())) out.insert(out.begin(), '-');
    return out;
}

std::string DataValue::canonical() const {
    switch (tag_) {
    case ValueTag::entity:
        return as_entity()->to_string();
    case ValueTag::quantity: {
        const auto& q = *as_quantity();
        std::string s = normalize_decimal(q.amount);
        if (q.unit) s += "~" + q.unit->to_string();
        return s;
    }
    case ValueTag::time: {
        const auto& t = *as_time();
        std::string s = t.year < 0 ? "-" : "+";
        s += pad_number(static_cast<std::uint64_t>(t.year < 0 ? -t.year : t.year), 4);
        if (t.precision >= 10) s += "-" + pad_number(t.month, 2);
        if (t.precision >= 11) s += "-" + pad_number(t.day, 2);
        if (t.precision >= 12) s += "T" + pad_number(t.hour, 2);
        if (t.precision >= 13) s += ":" + pad_number(t.minute, 2);
        if (t.precision >= 14) s += ":" + pad_number(t.second, 2) + "Z";
        return s;
    }
    case ValueTag::coordinate: {
        const auto& c = *as_coordinate();
        return format_coordinate_part(c.latitude) + "," + format_coordinate_part(c.longitude) +
               "@" + c.globe.to_string();
    }
    case ValueTag::string:
    case ValueTag::uri:
        return *as_text();
    case ValueTag::monolingual_text: {
        const auto& m = *as_monolingual();
        return m.text + "@" + m.language;
    }
    case ValueTag::some_value:
        return "somevalue";
    case ValueTag::no_value:
        return "novalue";
    }
    return {};
}

bool DataValue::operator==(const DataValue& other) const {
    return tag_ == other.tag_ && canonical() == other.canonical();
}

bool DataValue::operator<(const DataValue& other) const {
    if (tag_ != other.tag_) return tag_ < other.tag_;
    return canonical() < other.canonical();
}

} // namespace kgfca

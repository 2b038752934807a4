#include "kgfca/dump_parser.hpp"

#include "kgfca/error.hpp"
#include "compressed_stream.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace kgfca {

namespace detail {

std::unique_ptr<std::istream> open_input_stream(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    if (ext == ".gz")
        return std::make_unique<FilterIStream>(std::make_unique<GzipStreambuf>(path));
    if (ext == ".bz2") {
        std::string p = path.string();
        if (p.find('\'') != std::string::npos)
            throw ParseError("refusing path with quote character: " + p);
        if (!std::filesystem::exists(path)) throw ParseError("cannot open dump file: " + p);
        return std::make_unique<FilterIStream>(
            std::make_unique<PipeStreambuf>("bzip2 -dc -- '" + p + "'", p));
    }
    auto file = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file) throw ParseError("cannot open dump file: " + path.string());
    return file;
}

} // namespace detail

namespace {

using json = nlohmann::ordered_json;

// Thrown for one bad record; recoverable unless the reader is strict.
struct RecordError {
    std::string what;
};

[[noreturn]] void bad_record(const std::string& what) { throw RecordError{what}; }

EntityId parse_entity_or_fail(const std::string& text, const char* what) {
    auto id = EntityId::parse(text);
    if (!id) bad_record(std::string(what) + ": bad entity id '" + text + "'");
    return *id;
}

EntityId decode_entity_value(const json& value) {
    if (value.contains("id") && value["id"].is_string())
        return parse_entity_or_fail(value["id"].get<std::string>(), "entity value");
    if (value.contains("entity-type") && value.contains("numeric-id")) {
        std::string type = value["entity-type"].get<std::string>();
        std::uint64_t num = value["numeric-id"].get<std::uint64_t>();
        if (num == 0) bad_record("entity value: numeric-id 0");
        if (type == "item") return EntityId::item(num);
        if (type == "property") return EntityId::property(num);
        bad_record("entity value: unsupported entity-type '" + type + "'");
    }
    bad_record("entity value: missing id");
}

std::optional<EntityId> decode_entity_uri(const std::string& uri) {
    // "http://www.wikidata.org/entity/Q2" or a bare id
    std::size_t slash = uri.rfind('/');
    std::string tail = slash == std::string::npos ? uri : uri.substr(slash + 1);
    return EntityId::parse(tail);
}

DataValue decode_data_value(const json& snak) {
    std::string snaktype = snak.value("snaktype", "value");
    if (snaktype == "somevalue") return DataValue::some_value();
    if (snaktype == "novalue") return DataValue::no_value();
    if (snaktype != "value") bad_record("unknown snaktype '" + snaktype + "'");

    if (!snak.contains("datavalue")) bad_record("value snak without datavalue");
    const json& dv = snak["datavalue"];
    std::string type = dv.value("type", "");
    const json& value = dv.contains("value") ? dv["value"] : json{};

    if (type == "wikibase-entityid") return DataValue::entity(decode_entity_value(value));
    if (type == "string") {
        if (!value.is_string()) bad_record("string datavalue is not a string");
        // property datatype "url" marks URI-valued strings
        if (snak.value("datatype", "") == "url") return DataValue::uri(value.get<std::string>());
        return DataValue::string(value.get<std::string>());
    }
    if (type == "monolingualtext") {
        if (!value.contains("text") || !value.contains("language"))
            bad_record("monolingualtext missing text/language");
        return DataValue::monolingual({value["text"].get<std::string>(),
                                       value["language"].get<std::string>()});
    }
    if (type == "quantity") {
        if (!value.contains("amount")) bad_record("quantity missing amount");
        QuantityValue q;
        q.amount = value["amount"].get<std::string>();
        std::string unit = value.value("unit", "1");
        if (unit != "1" && !unit.empty()) {
            auto id = decode_entity_uri(unit);
            if (!id) bad_record("quantity: bad unit '" + unit + "'");
            q.unit = *id;
        }
        return DataValue::quantity(std::move(q));
    }
    if (type == "time") {
        if (!value.contains("time")) bad_record("time missing timestamp");
        int precision = value.value("precision", 9);
        auto t = TimeValue::parse_timestamp(value["time"].get<std::string>(), precision);
        if (!t) bad_record("time: bad timestamp '" + value["time"].get<std::string>() + "'");
        return DataValue::time(*t);
    }
    if (type == "globecoordinate") {
        if (!value.contains("latitude") || !value.contains("longitude"))
            bad_record("globecoordinate missing latitude/longitude");
        CoordinateValue c;
        c.latitude = value["latitude"].get<double>();
        c.longitude = value["longitude"].get<double>();
        if (value.contains("globe") && value["globe"].is_string()) {
            if (auto globe = decode_entity_uri(value["globe"].get<std::string>())) c.globe = *globe;
        }
        return DataValue::coordinate(c);
    }
    bad_record("unsupported datavalue type '" + type + "'");
}

Rank decode_rank(const json& claim) {
    std::string rank = claim.value("rank", "normal");
    if (rank == "deprecated") return Rank::deprecated;
    if (rank == "preferred") return Rank::preferred;
    if (rank == "normal") return Rank::normal;
    bad_record("unknown rank '" + rank + "'");
}

Statement decode_claim(const EntityId& subject, const EntityId& property, const json& claim) {
    if (!claim.contains("mainsnak")) bad_record("claim without mainsnak");
    Statement s;
    s.subject = subject;
    s.property = property;
    s.value = decode_data_value(claim["mainsnak"]);
    s.rank = decode_rank(claim);
    if (claim.contains("references") && claim["references"].is_array())
        s.reference_count = static_cast<std::uint32_t>(claim["references"].size());
    if (claim.contains("qualifiers")) {
        const json& qualifiers = claim["qualifiers"];
        if (!qualifiers.is_object()) bad_record("qualifiers is not an object");
        for (const auto& [qprop_text, snaks] : qualifiers.items()) {
            EntityId qprop = parse_entity_or_fail(qprop_text, "qualifier");
            if (!qprop.is_property()) bad_record("qualifier key is not a property");
            if (!snaks.is_array()) bad_record("qualifier snaks is not an array");
            for (const json& snak : snaks)
                s.annotation.push_back(Snak{qprop, decode_data_value(snak)});
        }
        normalize_annotation(s.annotation);
    }
    return s;
}

} // namespace

DumpReader::DumpReader(std::istream& in, ParseOptions options)
    : owned_(nullptr), in_(&in), options_(std::move(options)) {
    if (options_.selection.empty())
        throw ValidationError("property selection must be nonempty or select everything");
}

DumpReader DumpReader::open_file(const std::filesystem::path& path, ParseOptions options) {
    auto stream = detail::open_input_stream(path);
    DumpReader reader(*stream, std::move(options));
    reader.owned_ = std::move(stream);
    return reader;
}

std::optional<EntityRecord> DumpReader::next() {
    if (finished_) return std::nullopt;
    std::string line;
    while (std::getline(*in_, line)) {
        ++line_no_;
        ++stats_.lines;
        // trim whitespace and the per-line trailing comma
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (!line.empty() && line.back() == ',') line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        std::string_view body(line.data() + start, line.size() - start);
        if (body == "[") {
            if (line_no_ == 1) {
                saw_opening_bracket_ = true;
                continue;
            }
        }
        if (body == "]") {
            saw_closing_bracket_ = true;
            continue;
        }

        try {
            json record = json::parse(body);
            if (!record.is_object()) bad_record("record is not a JSON object");
            if (!record.contains("id") || !record["id"].is_string()) bad_record("record without id");
            std::string id_text = record["id"].get<std::string>();
            auto id = EntityId::parse(id_text);
            if (!id) {
                // lexemes and friends: not modelled, not an error
                ++stats_.unsupported_records;
                continue;
            }
            EntityRecord out;
            out.id = *id;
            if (record.contains("claims")) {
                const json& claims = record["claims"];
                if (!claims.is_object()) bad_record("claims is not an object");
                for (const auto& [prop_text, claim_list] : claims.items()) {
                    EntityId property = parse_entity_or_fail(prop_text, "claims key");
                    if (!property.is_property()) bad_record("claims key is not a property");
                    if (!options_.selection.contains(property)) continue;
                    if (!claim_list.is_array()) bad_record("claim list is not an array");
                    for (const json& claim : claim_list)
                        out.statements.push_back(decode_claim(*id, property, claim));
                }
            }
            ++stats_.records;
            stats_.statements += out.statements.size();
            return out;
        } catch (const RecordError& e) {
            if (options_.strict) throw ParseError("malformed record: " + e.what, line_no_);
            ++stats_.skipped_records;
            if (options_.on_record_error) options_.on_record_error(line_no_, e.what);
        } catch (const json::exception& e) {
            if (options_.strict)
                throw ParseError(std::string("malformed record: ") + e.what(), line_no_);
            ++stats_.skipped_records;
            if (options_.on_record_error) options_.on_record_error(line_no_, e.what());
        }
    }
    finished_ = true;
    if (saw_opening_bracket_ && !saw_closing_bracket_)
        throw ParseError("truncated dump: missing closing ']'", line_no_);
    return std::nullopt;
}

std::set<EntityId> read_property_selection(std::istream& in) {
    std::set<EntityId> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token) {
            std::size_t at = token.find('@');
            auto id = EntityId::parse(at == std::string::npos ? token : token.substr(0, at));
            if (!id || !id->is_property())
                throw ParseError("selection file: bad property '" + token + "'", line_no);
            out.insert(*id);
        }
    }
    return out;
}

std::set<EntityId> read_property_selection_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open selection file: " + path.string());
    return read_property_selection(in);
}

KnowledgeGraph build_graph(DumpReader& reader, const TranslationMap* translations,
                           GraphOptions options) {
    KnowledgeGraph g(options);
    while (auto record = reader.next()) g.add_statements(record->statements, translations);
    return g;
}

} // namespace kgfca

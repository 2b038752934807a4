#include "kgfca/translation.hpp"

#include "kgfca/error.hpp"

#include <fstream>
#include <sstream>

namespace kgfca {

std::vector<Statement> apply_property_translations(const Statement& s, const TranslationMap& map) {
    auto it = map.find(s.property);
    if (it == map.end()) return {s};

    const TranslationRule& rule = it->second;
    Statement rewritten = s;
    rewritten.property = rule.target;
    if (rule.qualifier) {
        rewritten.annotation.push_back(*rule.qualifier);
        normalize_annotation(rewritten.annotation);
    }

    std::vector<Statement> out;
    out.push_back(std::move(rewritten));
    if (rule.companion) {
        if (const EntityId* object = s.value.as_entity()) {
            Statement companion;
            companion.subject = *object;
            companion.property = rule.companion->property;
            companion.value = rule.companion->value;
            out.push_back(std::move(companion));
        }
    }
    return out;
}

const TranslationMap& default_translation_map() {
    // Source ids are the retired properties; names in comments. The ids are
    // best-effort historical values and can be overridden with a map file.
    static const TranslationMap map = [] {
        TranslationMap m;
        auto P = [](std::uint64_t n) { return EntityId::property(n); };
        auto Q = [](std::uint64_t n) { return EntityId::item(n); };
        // brother, sister -> sibling
        m[P(7)] = TranslationRule{P(3373), std::nullopt, std::nullopt};
        m[P(9)] = TranslationRule{P(3373), std::nullopt, std::nullopt};
        // grandparent -> relative, qualified with type of kinship = grandparent
        m[P(45)] = TranslationRule{P(1038), Snak{P(1039), DataValue::entity(Q(167918))}, std::nullopt};
        // family (taxon) -> parent taxon, companion taxon rank = family on the object
        m[P(70)] = TranslationRule{P(171), std::nullopt, Snak{P(105), DataValue::entity(Q(35409))}};
        // order (taxon) -> parent taxon, companion taxon rank = order on the object
        m[P(71)] = TranslationRule{P(171), std::nullopt, Snak{P(105), DataValue::entity(Q(36602))}};
        // main type (GND) -> instance of
        m[P(107)] = TranslationRule{P(31), std::nullopt, std::nullopt};
        // administrative entity -> instance of
        m[P(132)] = TranslationRule{P(31), std::nullopt, std::nullopt};
        // language family -> subclass of
        m[P(134)] = TranslationRule{P(279), std::nullopt, std::nullopt};
        return m;
    }();
    return map;
}

namespace {

DataValue parse_translation_value(const std::string& text) {
    if (auto id = EntityId::parse(text)) return DataValue::entity(*id);
    return DataValue::string(text);
}

Snak parse_prop_value(const std::string& token, std::size_t line_no) {
    std::size_t eq = token.find('=');
    if (eq == std::string::npos)
        throw ParseError("translation map: expected PROP=VALUE, got '" + token + "'", line_no);
    auto prop = EntityId::parse(token.substr(0, eq));
    if (!prop || !prop->is_property())
        throw ParseError("translation map: bad qualifier property '" + token.substr(0, eq) + "'",
                         line_no);
    return Snak{*prop, parse_translation_value(token.substr(eq + 1))};
}

} // namespace

TranslationMap read_translation_map(std::istream& in) {
    TranslationMap map;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::string src, arrow, tgt;
        if (!(tokens >> src)) continue; // blank
        if (!(tokens >> arrow >> tgt) || arrow != "->")
            throw ParseError("translation map: expected 'SRC -> TGT'", line_no);
        auto src_id = EntityId::parse(src);
        auto tgt_id = EntityId::parse(tgt);
        if (!src_id || !src_id->is_property() || !tgt_id || !tgt_id->is_property())
            throw ParseError("translation map: bad property id", line_no);
        TranslationRule rule{*tgt_id, std::nullopt, std::nullopt};
        std::string keyword;
        while (tokens >> keyword) {
            std::string pv;
            if (!(tokens >> pv))
                throw ParseError("translation map: '" + keyword + "' needs PROP=VALUE", line_no);
            if (keyword == "qualifier")
                rule.qualifier = parse_prop_value(pv, line_no);
            else if (keyword == "companion")
                rule.companion = parse_prop_value(pv, line_no);
            else
                throw ParseError("translation map: unknown keyword '" + keyword + "'", line_no);
        }
        map[*src_id] = rule;
    }
    return map;
}

TranslationMap read_translation_map_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open translation map file: " + path.string());
    return read_translation_map(in);
}

} // namespace kgfca

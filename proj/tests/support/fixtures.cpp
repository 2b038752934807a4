#include "fixtures.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>

namespace kgfca::testing {

using json = nlohmann::ordered_json;

FormalContext family_table() {
    FormalContext k;
    k.objects = {"AngelinaJolie", "MileyCyrus", "NaomiWatts", "Victoria"};
    k.attributes = {"godparent", "isMother", "mother"};
    k.rows = {
        Bitset::of(3, {0, 1, 2}), // AngelinaJolie
        Bitset::of(3, {0, 2}),    // MileyCyrus
        Bitset::of(3, {1, 2}),    // NaomiWatts
        Bitset::of(3, {0, 1, 2}), // Victoria
    };
    return k;
}

namespace {

json entity_value(const std::string& id) {
    return json{{"snaktype", "value"},
                {"datavalue",
                 json{{"type", "wikibase-entityid"}, {"value", json{{"id", id}}}}}};
}

json time_value(const std::string& timestamp, int precision) {
    return json{{"snaktype", "value"},
                {"datavalue",
                 json{{"type", "time"},
                      {"value", json{{"time", timestamp}, {"precision", precision}}}}}};
}

json quantity_value(const std::string& amount) {
    return json{{"snaktype", "value"},
                {"datavalue", json{{"type", "quantity"}, {"value", json{{"amount", amount}}}}}};
}

json special_value(const std::string& snaktype) { return json{{"snaktype", snaktype}}; }

json claim(const json& mainsnak, const std::string& rank = "normal",
           const json& qualifiers = json::object(), int references = 0) {
    json c;
    c["mainsnak"] = mainsnak;
    c["type"] = "statement";
    if (!qualifiers.empty()) c["qualifiers"] = qualifiers;
    c["rank"] = rank;
    if (references > 0) {
        json refs = json::array();
        for (int i = 0; i < references; ++i) refs.push_back(json::object());
        c["references"] = refs;
    }
    return c;
}

std::string wrap_records(const std::vector<json>& records) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        out += records[i].dump();
        out += i + 1 < records.size() ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

} // namespace

std::string family_dump_text() {
    // P25 = mother, P1290 = godparent; mothers point inside the family so the
    // pruned directed context has exactly the four women as objects.
    std::vector<json> records;
    auto person = [&](const std::string& id, const std::string& mother_of,
                      bool has_godparent) {
        json claims;
        claims["P25"] = json::array({claim(entity_value(mother_of))});
        if (has_godparent) claims["P1290"] = json::array({claim(entity_value("Q555"))});
        records.push_back(json{{"id", id}, {"claims", claims}});
    };
    person("Q13909", "Q9439", true);    // AngelinaJolie, mother Victoria
    person("Q4235", "Q13909", true);    // MileyCyrus, mother AngelinaJolie
    person("Q132616", "Q9439", false);  // NaomiWatts, mother Victoria
    person("Q9439", "Q132616", true);   // Victoria, mother NaomiWatts
    return wrap_records(records);
}

std::string mixed_dump_text() {
    std::vector<json> records;

    // Liz Taylor: two spouse statements with start/end-time qualifiers, one
    // reference on the first; plus an instance-of edge.
    {
        json qualifiers1;
        qualifiers1["P580"] = json::array({time_value("+1964-00-00T00:00:00Z", 9)});
        qualifiers1["P582"] = json::array({time_value("+1974-00-00T00:00:00Z", 9)});
        json qualifiers2;
        qualifiers2["P580"] = json::array({time_value("+1983-00-00T00:00:00Z", 9)});
        qualifiers2["P582"] = json::array({time_value("+1984-00-00T00:00:00Z", 9)});
        json claims;
        claims["P26"] = json::array({claim(entity_value("Q151973"), "normal", qualifiers1, 1),
                                     claim(entity_value("Q151973"), "normal", qualifiers2)});
        claims["P31"] = json::array({claim(entity_value("Q5"))});
        records.push_back(json{{"id", "Q34851"}, {"claims", claims}});
    }

    // Pluto: deprecated planet statement with an end-time qualifier, and a
    // kept dwarf-planet statement.
    {
        json qualifiers;
        qualifiers["P582"] = json::array({time_value("+2006-09-13T00:00:00Z", 11)});
        json claims;
        claims["P31"] = json::array({claim(entity_value("Q634"), "deprecated", qualifiers),
                                     claim(entity_value("Q2199"))});
        records.push_back(json{{"id", "Q339"}, {"claims", claims}});
    }

    // Frankfurt: preferred population statement with determination-method and
    // point-in-time qualifiers, an instance-of edge and a coordinate.
    {
        json qualifiers;
        qualifiers["P459"] = json::array({entity_value("Q791801")});
        qualifiers["P585"] = json::array({time_value("+2016-12-31T00:00:00Z", 11)});
        json claims;
        claims["P1082"] = json::array({claim(quantity_value("+736414"), "preferred", qualifiers)});
        claims["P31"] = json::array({claim(entity_value("Q515"))});
        claims["P625"] = json::array(
            {claim(json{{"snaktype", "value"},
                        {"datavalue", json{{"type", "globecoordinate"},
                                           {"value", json{{"latitude", 50.110556},
                                                          {"longitude", 8.682222},
                                                          {"globe",
                                                           "http://www.wikidata.org/entity/Q2"}}}}}})});
        records.push_back(json{{"id", "Q1794"}, {"claims", claims}});
    }

    // Richard Burton: human.
    {
        json claims;
        claims["P31"] = json::array({claim(entity_value("Q5"))});
        records.push_back(json{{"id", "Q151973"}, {"claims", claims}});
    }

    // Q42: a some-value father, a spouse statement whose qualifier is
    // some-value (drops whole statement), and a kept instance-of.
    {
        json qualifiers;
        qualifiers["P580"] = json::array({special_value("somevalue")});
        json claims;
        claims["P22"] = json::array({claim(special_value("somevalue"))});
        claims["P26"] = json::array({claim(entity_value("Q634"), "normal", qualifiers)});
        claims["P31"] = json::array({claim(entity_value("Q5"))});
        records.push_back(json{{"id", "Q42"}, {"claims", claims}});
    }

    // Q43: a no-value father only; prunes away entirely.
    {
        json claims;
        claims["P22"] = json::array({claim(special_value("novalue"))});
        records.push_back(json{{"id", "Q43"}, {"claims", claims}});
    }

    // The class "human" is itself an instance of a class.
    {
        json claims;
        claims["P31"] = json::array({claim(entity_value("Q16889133"))});
        records.push_back(json{{"id", "Q5"}, {"claims", claims}});
    }

    // A property entity declared instance of a property class.
    {
        json claims;
        claims["P31"] = json::array({claim(entity_value("Q58377104"))});
        records.push_back(json{{"id", "P1104"}, {"claims", claims}});
    }

    return wrap_records(records);
}

FormalContext contranominal(std::size_t n) {
    FormalContext k;
    for (std::size_t i = 0; i < n; ++i) {
        k.objects.push_back("g" + std::to_string(i));
        k.attributes.push_back("m" + std::to_string(i));
    }
    for (std::size_t g = 0; g < n; ++g) {
        Bitset row = Bitset::full(n);
        row.reset(g);
        k.rows.push_back(std::move(row));
    }
    return k;
}

FormalContext full_context(std::size_t objects, std::size_t attributes) {
    FormalContext k;
    for (std::size_t g = 0; g < objects; ++g) k.objects.push_back("g" + std::to_string(g));
    for (std::size_t m = 0; m < attributes; ++m) k.attributes.push_back("m" + std::to_string(m));
    k.rows.assign(objects, Bitset::full(attributes));
    return k;
}

FormalContext random_context(std::mt19937_64& rng, std::size_t max_objects,
                             std::size_t max_attributes) {
    std::uniform_int_distribution<std::size_t> object_count(1, max_objects);
    std::uniform_int_distribution<std::size_t> attribute_count(1, max_attributes);
    std::uniform_real_distribution<double> density(0.15, 0.85);
    std::size_t g = object_count(rng);
    std::size_t m = attribute_count(rng);
    double p = density(rng);

    FormalContext k;
    for (std::size_t i = 0; i < g; ++i) k.objects.push_back("g" + std::to_string(i));
    for (std::size_t i = 0; i < m; ++i) k.attributes.push_back("m" + std::to_string(i));
    std::bernoulli_distribution incident(p);
    for (std::size_t i = 0; i < g; ++i) {
        Bitset row(m);
        for (std::size_t j = 0; j < m; ++j)
            if (incident(rng)) row.set(j);
        k.rows.push_back(std::move(row));
    }
    return k;
}

KnowledgeGraph graph_of(const std::vector<Statement>& statements, GraphOptions options) {
    KnowledgeGraph g(options);
    g.add_statements(statements, nullptr);
    return g;
}

Statement make_statement(const std::string& subject, const std::string& property,
                         const std::string& object_entity, Rank rank) {
    Statement s;
    s.subject = *EntityId::parse(subject);
    s.property = *EntityId::parse(property);
    s.value = DataValue::entity(*EntityId::parse(object_entity));
    s.rank = rank;
    return s;
}

std::filesystem::path write_temp_file(const std::string& name, const std::string& content) {
    auto dir = std::filesystem::temp_directory_path() / "kgfca-tests";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    return path;
}

} // namespace kgfca::testing

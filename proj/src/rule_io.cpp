#include "kgfca/rule_io.hpp"

#include "kgfca/error.hpp"

#include <json.hpp>

#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <unordered_map>

namespace kgfca {

namespace {

using json = nlohmann::ordered_json;

std::string join_names(const Bitset& set, const std::vector<std::string>& names) {
    std::string out;
    bool first = true;
    set.for_each([&](std::size_t i) {
        if (!first) out += ",";
        out += names[i];
        first = false;
    });
    return out;
}

// Splits "A1,A2" into names; empty text means the empty set.
std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    std::istringstream in(text);
    while (std::getline(in, current, ',')) {
        // trim
        std::size_t begin = current.find_first_not_of(" \t");
        std::size_t end = current.find_last_not_of(" \t");
        if (begin == std::string::npos) continue;
        out.push_back(current.substr(begin, end - begin + 1));
    }
    return out;
}

// Name registry for text files. The universe is the set of mentioned names
// in sorted order, matching the canonical attribute order of built contexts,
// so rewriting a canonical file reproduces it byte for byte.
struct NameIndex {
    std::set<std::string> names;

    void add(const std::string& name) { names.insert(name); }

    std::vector<std::string> sorted() const { return {names.begin(), names.end()}; }

    std::size_t index_of(const std::string& name) const {
        return static_cast<std::size_t>(std::distance(names.begin(), names.find(name)));
    }
};

struct ParsedRuleLine {
    std::vector<std::string> premise;
    std::vector<std::string> conclusion;
    bool has_support = false;
    std::size_t support_count = 0;
    std::size_t object_count = 0;
    bool has_confidence = false;
    std::size_t premise_count = 0;
};

std::size_t parse_size(const std::string& text, std::size_t line_no) {
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("junk");
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw ParseError("rules file: bad number '" + text + "'", line_no);
    }
}

// "A -> B", optionally followed by " ; supp=K/N" and " conf=K/N".
ParsedRuleLine parse_rule_line(const std::string& line, std::size_t line_no) {
    ParsedRuleLine out;
    std::string body = line;
    std::size_t semi = body.find(" ; ");
    if (semi != std::string::npos) {
        std::istringstream metrics(body.substr(semi + 3));
        body.resize(semi);
        std::string token;
        while (metrics >> token) {
            bool is_supp = token.rfind("supp=", 0) == 0;
            bool is_conf = token.rfind("conf=", 0) == 0;
            if (!is_supp && !is_conf)
                throw ParseError("rules file: unknown metric '" + token + "'", line_no);
            std::string ratio = token.substr(5);
            std::size_t slash = ratio.find('/');
            if (slash == std::string::npos)
                throw ParseError("rules file: metric must be K/N", line_no);
            std::size_t numerator = parse_size(ratio.substr(0, slash), line_no);
            std::size_t denominator = parse_size(ratio.substr(slash + 1), line_no);
            if (is_supp) {
                out.has_support = true;
                out.support_count = numerator;
                out.object_count = denominator;
            } else {
                out.has_confidence = true;
                if (numerator != out.support_count && out.has_support)
                    throw ParseError("rules file: conf numerator != supp numerator", line_no);
                out.premise_count = denominator;
            }
        }
    }
    std::size_t arrow = body.find("->");
    if (arrow == std::string::npos) throw ParseError("rules file: missing '->'", line_no);
    std::string premise_text = body.substr(0, arrow);
    std::string conclusion_text = body.substr(arrow + 2);
    out.premise = split_names(premise_text);
    out.conclusion = split_names(conclusion_text);
    return out;
}

} // namespace

void write_rules_text(const NamedBase& base, std::ostream& out) {
    bool with_support = !base.support_counts.empty() && base.object_count > 0;
    for (std::size_t i = 0; i < base.implications.size(); ++i) {
        const Implication& imp = base.implications[i];
        Bitset conclusion = difference(imp.conclusion, imp.premise);
        std::string premise_text = join_names(imp.premise, base.attributes);
        std::string line = premise_text.empty()
                               ? "-> " + join_names(conclusion, base.attributes)
                               : premise_text + " -> " + join_names(conclusion, base.attributes);
        if (with_support)
            line += " ; supp=" + std::to_string(base.support_counts[i]) + "/" +
                    std::to_string(base.object_count);
        out << line << "\n";
    }
}

NamedBase read_rules_text(std::istream& in) {
    NamedBase base;
    NameIndex index;
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> raw;
    std::vector<std::pair<bool, std::pair<std::size_t, std::size_t>>> supports;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        ParsedRuleLine parsed = parse_rule_line(line, line_no);
        for (const auto& n : parsed.premise) index.add(n);
        for (const auto& n : parsed.conclusion) index.add(n);
        raw.emplace_back(parsed.premise, parsed.conclusion);
        supports.emplace_back(parsed.has_support,
                              std::make_pair(parsed.support_count, parsed.object_count));
        if (parsed.has_support) base.object_count = parsed.object_count;
    }
    base.attributes = index.sorted();
    const std::size_t width = base.attributes.size();
    bool all_supported = !raw.empty();
    for (std::size_t i = 0; i < raw.size(); ++i) {
        Bitset premise(width), conclusion(width);
        for (const auto& n : raw[i].first) premise.set(index.index_of(n));
        for (const auto& n : raw[i].second) conclusion.set(index.index_of(n));
        conclusion |= premise;
        base.implications.push_back(Implication{std::move(premise), std::move(conclusion)});
        if (!supports[i].first) all_supported = false;
    }
    if (all_supported)
        for (const auto& s : supports) base.support_counts.push_back(s.second.first);
    return base;
}

void write_rules_records(const NamedBase& base, std::ostream& out) {
    json header;
    header["attributes"] = base.attributes;
    header["object_count"] = base.object_count;
    out << header.dump() << "\n";
    for (std::size_t i = 0; i < base.implications.size(); ++i) {
        const Implication& imp = base.implications[i];
        json record;
        record["premise"] = json::array();
        imp.premise.for_each([&](std::size_t a) { record["premise"].push_back(base.attributes[a]); });
        record["conclusion"] = json::array();
        difference(imp.conclusion, imp.premise).for_each([&](std::size_t a) {
            record["conclusion"].push_back(base.attributes[a]);
        });
        if (!base.support_counts.empty()) record["support_count"] = base.support_counts[i];
        out << record.dump() << "\n";
    }
}

NamedBase read_rules_records(std::istream& in) {
    NamedBase base;
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    std::unordered_map<std::string, std::size_t> index;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json record;
        try {
            record = json::parse(line);
        } catch (const json::exception& e) {
            throw ParseError(std::string("rules file: ") + e.what(), line_no);
        }
        if (!saw_header) {
            if (!record.contains("attributes") || !record["attributes"].is_array())
                throw ParseError("rules file: first record must list attributes", line_no);
            for (const auto& name : record["attributes"])
                base.attributes.push_back(name.get<std::string>());
            base.object_count = record.value("object_count", 0u);
            for (std::size_t i = 0; i < base.attributes.size(); ++i)
                index.emplace(base.attributes[i], i);
            saw_header = true;
            continue;
        }
        auto to_set = [&](const json& names) {
            Bitset set(base.attributes.size());
            for (const auto& name : names) {
                auto it = index.find(name.get<std::string>());
                if (it == index.end())
                    throw ParseError("rules file: attribute '" + name.get<std::string>() +
                                         "' not in header",
                                     line_no);
                set.set(it->second);
            }
            return set;
        };
        Implication imp;
        imp.premise = to_set(record.value("premise", json::array()));
        imp.conclusion = to_set(record.value("conclusion", json::array()));
        imp.conclusion |= imp.premise;
        base.implications.push_back(std::move(imp));
        if (record.contains("support_count"))
            base.support_counts.push_back(record["support_count"].get<std::size_t>());
    }
    if (!saw_header && !base.implications.empty())
        throw ParseError("rules file: missing header record");
    if (!base.support_counts.empty() && base.support_counts.size() != base.implications.size())
        throw ParseError("rules file: support_count missing on some rules");
    return base;
}

void write_assoc_rules_text(const NamedRules& rules, std::ostream& out) {
    for (const AssociationRule& rule : rules.rules) {
        std::string premise_text = join_names(rule.premise, rules.attributes);
        std::string line = premise_text.empty()
                               ? "-> " + join_names(rule.conclusion, rules.attributes)
                               : premise_text + " -> " + join_names(rule.conclusion, rules.attributes);
        line += " ; supp=" + std::to_string(rule.rule_count) + "/" +
                std::to_string(rule.object_count) + " conf=" + std::to_string(rule.rule_count) +
                "/" + std::to_string(rule.premise_count);
        out << line << "\n";
    }
}

NamedRules read_assoc_rules_text(std::istream& in) {
    NamedRules rules;
    NameIndex index;
    struct Raw {
        std::vector<std::string> premise, conclusion;
        std::size_t rule_count, object_count, premise_count;
    };
    std::vector<Raw> raw;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        ParsedRuleLine parsed = parse_rule_line(line, line_no);
        if (!parsed.has_support || !parsed.has_confidence)
            throw ParseError("rules file: association rules need supp and conf", line_no);
        for (const auto& n : parsed.premise) index.add(n);
        for (const auto& n : parsed.conclusion) index.add(n);
        raw.push_back(Raw{parsed.premise, parsed.conclusion, parsed.support_count,
                          parsed.object_count, parsed.premise_count});
        rules.object_count = parsed.object_count;
    }
    rules.attributes = index.sorted();
    const std::size_t width = rules.attributes.size();
    for (const Raw& r : raw) {
        AssociationRule rule;
        rule.premise = Bitset(width);
        rule.conclusion = Bitset(width);
        for (const auto& n : r.premise) rule.premise.set(index.index_of(n));
        for (const auto& n : r.conclusion) rule.conclusion.set(index.index_of(n));
        rule.rule_count = r.rule_count;
        rule.object_count = r.object_count;
        rule.premise_count = r.premise_count;
        rules.rules.push_back(std::move(rule));
    }
    return rules;
}

void write_assoc_rules_records(const NamedRules& rules, std::ostream& out) {
    json header;
    header["attributes"] = rules.attributes;
    header["object_count"] = rules.object_count;
    out << header.dump() << "\n";
    for (const AssociationRule& rule : rules.rules) {
        json record;
        record["premise"] = json::array();
        rule.premise.for_each([&](std::size_t a) { record["premise"].push_back(rules.attributes[a]); });
        record["conclusion"] = json::array();
        rule.conclusion.for_each(
            [&](std::size_t a) { record["conclusion"].push_back(rules.attributes[a]); });
        record["support_count"] = rule.rule_count;
        record["premise_count"] = rule.premise_count;
        out << record.dump() << "\n";
    }
}

NamedRules read_assoc_rules_records(std::istream& in) {
    NamedRules rules;
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    std::unordered_map<std::string, std::size_t> index;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json record;
        try {
            record = json::parse(line);
        } catch (const json::exception& e) {
            throw ParseError(std::string("rules file: ") + e.what(), line_no);
        }
        if (!saw_header) {
            if (!record.contains("attributes") || !record["attributes"].is_array())
                throw ParseError("rules file: first record must list attributes", line_no);
            for (const auto& name : record["attributes"])
                rules.attributes.push_back(name.get<std::string>());
            rules.object_count = record.value("object_count", 0u);
            for (std::size_t i = 0; i < rules.attributes.size(); ++i)
                index.emplace(rules.attributes[i], i);
            saw_header = true;
            continue;
        }
        auto to_set = [&](const json& names) {
            Bitset set(rules.attributes.size());
            for (const auto& name : names) {
                auto it = index.find(name.get<std::string>());
                if (it == index.end())
                    throw ParseError("rules file: attribute '" + name.get<std::string>() +
                                         "' not in header",
                                     line_no);
                set.set(it->second);
            }
            return set;
        };
        AssociationRule rule;
        rule.premise = to_set(record.value("premise", json::array()));
        rule.conclusion = to_set(record.value("conclusion", json::array()));
        rule.rule_count = record.value("support_count", 0u);
        rule.premise_count = record.value("premise_count", 0u);
        rule.object_count = rules.object_count;
        rules.rules.push_back(std::move(rule));
    }
    if (!saw_header && !rules.rules.empty()) throw ParseError("rules file: missing header record");
    return rules;
}

void write_rules_text_file(const NamedBase& base, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write rules file: " + path.string());
    write_rules_text(base, out);
}

NamedBase read_rules_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open rules file: " + path.string());
    return read_rules_text(in);
}

void write_rules_records_file(const NamedBase& base, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write rules file: " + path.string());
    write_rules_records(base, out);
}

NamedBase read_rules_records_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open rules file: " + path.string());
    return read_rules_records(in);
}

void write_assoc_rules_text_file(const NamedRules& rules, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write rules file: " + path.string());
    write_assoc_rules_text(rules, out);
}

NamedRules read_assoc_rules_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open rules file: " + path.string());
    return read_assoc_rules_text(in);
}

void write_assoc_rules_records_file(const NamedRules& rules, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write rules file: " + path.string());
    write_assoc_rules_records(rules, out);
}

NamedRules read_assoc_rules_records_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open rules file: " + path.string());
    return read_assoc_rules_records(in);
}

} // namespace kgfca

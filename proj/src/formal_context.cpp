#include "kgfca/formal_context.hpp"

#include "kgfca/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace kgfca {

ContextStats stats(const FormalContext& k) {
    ContextStats s;
    s.object_count = k.objects.size();
    s.attribute_count = k.attributes.size();
    s.incidence_count = k.incidence_count();
    if (s.object_count && s.attribute_count)
        s.density = static_cast<double>(s.incidence_count) /
                    (static_cast<double>(s.object_count) * static_cast<double>(s.attribute_count));
    return s;
}

FormalContext prune_empty(const FormalContext& k) {
    FormalContext current = k;
    while (true) {
        std::vector<std::size_t> keep_objects;
        for (std::size_t g = 0; g < current.objects.size(); ++g)
            if (!current.rows[g].empty()) keep_objects.push_back(g);

        Bitset column_used(current.attributes.size());
        for (std::size_t g : keep_objects) column_used |= current.rows[g];
        std::vector<std::size_t> keep_attributes = column_used.to_indices();

        if (keep_objects.size() == current.objects.size() &&
            keep_attributes.size() == current.attributes.size())
            return current;

        FormalContext next;
        next.name = current.name;
        std::vector<std::size_t> attribute_map(current.attributes.size(), SIZE_MAX);
        for (std::size_t i = 0; i < keep_attributes.size(); ++i) {
            attribute_map[keep_attributes[i]] = i;
            next.attributes.push_back(current.attributes[keep_attributes[i]]);
        }
        for (std::size_t g : keep_objects) {
            next.objects.push_back(current.objects[g]);
            Bitset row(next.attributes.size());
            current.rows[g].for_each([&](std::size_t m) {
                if (attribute_map[m] != SIZE_MAX) row.set(attribute_map[m]);
            });
            next.rows.push_back(std::move(row));
        }
        current = std::move(next);
    }
}

FormalContext union_contexts(const FormalContext& a, const FormalContext& b) {
    FormalContext out;
    out.name = a.name;
    std::unordered_map<std::string, std::size_t> object_index, attribute_index;

    for (const auto& label : a.objects) {
        object_index.emplace(label, out.objects.size());
        out.objects.push_back(label);
    }
    for (const auto& label : b.objects)
        if (object_index.emplace(label, out.objects.size()).second) out.objects.push_back(label);

    for (const auto& label : a.attributes) {
        attribute_index.emplace(label, out.attributes.size());
        out.attributes.push_back(label);
    }
    for (const auto& label : b.attributes)
        if (attribute_index.emplace(label, out.attributes.size()).second)
            out.attributes.push_back(label);

    out.rows.assign(out.objects.size(), Bitset(out.attributes.size()));
    auto merge = [&](const FormalContext& k) {
        for (std::size_t g = 0; g < k.objects.size(); ++g) {
            std::size_t og = object_index.at(k.objects[g]);
            k.rows[g].for_each(
                [&](std::size_t m) { out.rows[og].set(attribute_index.at(k.attributes[m])); });
        }
    };
    merge(a);
    merge(b);
    return out;
}

void write_burmeister(const FormalContext& k, std::ostream& out) {
    out << "B\n" << k.name << "\n";
    out << k.objects.size() << "\n" << k.attributes.size() << "\n\n";
    for (const auto& label : k.objects) out << label << "\n";
    for (const auto& label : k.attributes) out << label << "\n";
    for (const auto& row : k.rows) {
        std::string line(k.attributes.size(), '.');
        row.for_each([&](std::size_t m) { line[m] = 'X'; });
        out << line << "\n";
    }
}

FormalContext read_burmeister(std::istream& in) {
    std::size_t line_no = 0;
    auto next_line = [&](std::string& line) {
        if (!std::getline(in, line)) throw ParseError("context file: unexpected end of file", line_no);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
    };

    std::string line;
    next_line(line);
    if (line != "B") throw ParseError("context file: expected 'B' header", line_no);

    FormalContext k;
    next_line(k.name);

    auto parse_count = [&](const std::string& text) -> std::size_t {
        try {
            std::size_t pos = 0;
            unsigned long long v = std::stoull(text, &pos);
            if (pos != text.size()) throw std::invalid_argument("junk");
            return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            throw ParseError("context file: bad count '" + text + "'", line_no);
        }
    };

    next_line(line);
    std::size_t object_count = parse_count(line);
    next_line(line);
    std::size_t attribute_count = parse_count(line);
    next_line(line);
    if (!line.empty()) throw ParseError("context file: expected blank separator line", line_no);

    std::unordered_set<std::string> seen;
    for (std::size_t g = 0; g < object_count; ++g) {
        next_line(line);
        if (!seen.insert(line).second)
            throw ParseError("context file: duplicate object label '" + line + "'", line_no);
        k.objects.push_back(line);
    }
    seen.clear();
    for (std::size_t m = 0; m < attribute_count; ++m) {
        next_line(line);
        if (!seen.insert(line).second)
            throw ParseError("context file: duplicate attribute label '" + line + "'", line_no);
        k.attributes.push_back(line);
    }
    for (std::size_t g = 0; g < object_count; ++g) {
        next_line(line);
        if (line.size() != attribute_count)
            throw ParseError("context file: row width != attribute count", line_no);
        Bitset row(attribute_count);
        for (std::size_t m = 0; m < attribute_count; ++m) {
            if (line[m] == 'X' || line[m] == 'x')
                row.set(m);
            else if (line[m] != '.')
                throw ParseError("context file: row characters must be 'X' or '.'", line_no);
        }
        k.rows.push_back(std::move(row));
    }
    return k;
}

void write_burmeister_file(const FormalContext& k, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write context file: " + path.string());
    write_burmeister(k, out);
    if (!out) throw ParseError("failed writing context file: " + path.string());
}

FormalContext read_burmeister_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open context file: " + path.string());
    return read_burmeister(in);
}

void write_metadata_file(const std::filesystem::path& path,
                         const std::vector<std::pair<std::string, std::string>>& entries) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write metadata file: " + path.string());
    for (const auto& [key, value] : entries) out << key << "=" << value << "\n";
}

} // namespace kgfca

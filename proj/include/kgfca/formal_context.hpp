#pragma once

#include "kgfca/bitset.hpp"

#include <cstddef>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace kgfca {

// A formal context: objects, attributes and their incidence, stored as one
// attribute bitset per object. Labels are free text; built contexts use
// entity ids and canonical attribute names.
struct FormalContext {
    std::string name; // Burmeister name slot, empty for built contexts
    std::vector<std::string> objects;
    std::vector<std::string> attributes;
    std::vector<Bitset> rows; // rows[g].size() == attributes.size()

    bool incident(std::size_t object, std::size_t attribute) const {
        return rows[object].test(attribute);
    }

    std::size_t incidence_count() const {
        std::size_t n = 0;
        for (const auto& row : rows) n += row.count();
        return n;
    }

    bool operator==(const FormalContext&) const = default;
};

struct ContextStats {
    std::size_t object_count = 0;
    std::size_t attribute_count = 0;
    std::size_t incidence_count = 0;
    double density = 0.0; // 0 when either count is 0
};

ContextStats stats(const FormalContext& k);

// Drops objects and attributes with no incidence, preserving relative
// order. Iterated to a fixpoint, although one pass already suffices.
FormalContext prune_empty(const FormalContext& k);

// Point-wise union: a's objects then b's new ones, attributes likewise,
// incidence translated onto the merged index space.
FormalContext union_contexts(const FormalContext& a, const FormalContext& b);

// Burmeister format, bit-exact:
//   B \n <name> \n <objects> \n <attributes> \n \n labels... rows of X/.
void write_burmeister(const FormalContext& k, std::ostream& out);
FormalContext read_burmeister(std::istream& in);
void write_burmeister_file(const FormalContext& k, const std::filesystem::path& path);
FormalContext read_burmeister_file(const std::filesystem::path& path);

// Provenance sidecar: one "key=value" per line, in the given order.
void write_metadata_file(const std::filesystem::path& path,
                         const std::vector<std::pair<std::string, std::string>>& entries);

} // namespace kgfca

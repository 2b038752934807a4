#include "kgfca/statement.hpp"

#include <algorithm>
#include <set>

namespace kgfca {

const char* rank_name(Rank r) {
    switch (r) {
    case Rank::deprecated: return "deprecated";
    case Rank::normal: return "normal";
    case Rank::preferred: return "preferred";
    }
    return "normal";
}

bool Snak::operator==(const Snak& other) const {
    return property == other.property && value == other.value;
}

bool Snak::operator<(const Snak& other) const {
    if (property != other.property) return property < other.property;
    return value < other.value;
}

bool Statement::operator==(const Statement& other) const {
    return subject == other.subject && property == other.property && value == other.value &&
           annotation == other.annotation && rank == other.rank &&
           reference_count == other.reference_count;
}

void normalize_annotation(std::vector<Snak>& annotation) {
    std::sort(annotation.begin(), annotation.end());
    annotation.erase(std::unique(annotation.begin(), annotation.end()), annotation.end());
}

bool keep_statement(const Statement& s) {
    if (s.rank == Rank::deprecated) return false;
    if (s.value.is_special()) return false;
    for (const Snak& snak : s.annotation)
        if (snak.value.is_special()) return false;
    return true;
}

std::vector<EntityId> subject_projection(std::span<const Statement> relation) {
    std::set<EntityId> out;
    for (const Statement& t : relation) out.insert(t.subject);
    return {out.begin(), out.end()};
}

std::vector<DataValue> object_projection(std::span<const Statement> relation) {
    std::vector<DataValue> out;
    for (const Statement& t : relation) out.push_back(t.value);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::vector<Snak>> annotation_projection(std::span<const Statement> relation) {
    std::vector<std::vector<Snak>> out;
    for (const Statement& t : relation) out.push_back(t.annotation);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace kgfca

#pragma once

#include "kgfca/data_value.hpp"
#include "kgfca/entity.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace kgfca {

enum class Rank : std::uint8_t { deprecated, normal, preferred };

const char* rank_name(Rank r);

// Qualifier: a (property, value) pair refining a statement.
struct Snak {
    EntityId property;
    DataValue value;

    bool operator==(const Snak& other) const;
    bool operator<(const Snak& other) const;
};

// One tuple of a property relation: subject, value, qualifier set, rank and
// reference count. The annotation is kept sorted and free of duplicate
// (property, value) pairs.
struct Statement {
    EntityId subject;
    EntityId property;
    DataValue value;
    std::vector<Snak> annotation;
    Rank rank = Rank::normal;
    std::uint32_t reference_count = 0;

    bool operator==(const Statement& other) const;
};

// Sorts and deduplicates an annotation in place.
void normalize_annotation(std::vector<Snak>& annotation);

// Load-time filter: drops deprecated statements and statements whose value
// or any qualifier value is some-value/no-value. Normal and preferred both
// pass.
bool keep_statement(const Statement& s);

// Def.-2 style projections, extended element-wise over a relation.
// Results are sorted and deduplicated.
std::vector<EntityId> subject_projection(std::span<const Statement> relation);
std::vector<DataValue> object_projection(std::span<const Statement> relation);
std::vector<std::vector<Snak>> annotation_projection(std::span<const Statement> relation);

} // namespace kgfca

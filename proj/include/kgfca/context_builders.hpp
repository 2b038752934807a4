#pragma once

#include "kgfca/attribute_spec.hpp"
#include "kgfca/formal_context.hpp"
#include "kgfca/knowledge_graph.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <utility>

namespace kgfca {

using DirectedProperty = std::pair<EntityId, Direction>;

// Properties declared instances of `cls` in g (how the data sets pick their
// property families). Sorted for determinism.
std::set<EntityId> select_properties_by_class(const KnowledgeGraph& g, const EntityId& cls);

// All builders: objects are entities ordered by first appearance in the
// dump, attributes sorted by canonical text, empty rows and columns pruned.
// An empty property selection is a ValidationError.

// (e, p) incident iff e occurs as subject of some p-statement.
FormalContext build_plain(const KnowledgeGraph& g, const std::set<EntityId>& properties);

// (e, p@dir) incident iff e occurs in the dir position of some p-statement.
// Only entity values count for the object colour.
FormalContext build_directed(const KnowledgeGraph& g, const std::set<DirectedProperty>& properties);

struct QualifiedOptions {
    // Restricts qualifier properties; nullopt keeps all.
    std::optional<std::set<EntityId>> qualifier_filter;
    // Per (property, dir, qualifier property): keep only the k most frequent
    // values, ties broken by canonical text. nullopt keeps all.
    std::optional<std::uint32_t> max_values_per_qualifier;
    // Expose statement rank as a reserved pseudo-qualifier.
    bool include_rank = false;
};

// (q, (p, dir, a)) incident iff some p-statement has q in the dir position
// and a among its qualifiers.
FormalContext build_qualified(const KnowledgeGraph& g, const std::set<DirectedProperty>& properties,
                              const QualifiedOptions& options = {});

// Subject colour: q has (p, subj, c) iff some p-statement on q has an object
// that is an instance of c. Object colour: q has (p, obj, c) iff q occurs as
// object of some p-statement and q itself is an instance of c.
FormalContext build_classified(const KnowledgeGraph& g, const std::set<DirectedProperty>& properties,
                               const std::optional<std::set<EntityId>>& class_filter = std::nullopt);

// Reads a selection file whose lines may carry @subj/@obj suffixes; a bare
// property selects both colours.
std::set<DirectedProperty> read_directed_selection(std::istream& in);
std::set<DirectedProperty> read_directed_selection_file(const std::filesystem::path& path);

} // namespace kgfca

#pragma once

#include "kgfca/statement.hpp"
#include "kgfca/translation.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace kgfca {

struct GraphOptions {
    // The class-membership and subclass properties are configurable; the
    // defaults match the common deployment.
    EntityId instance_of = EntityId::property(31);
    EntityId subclass_of = EntityId::property(279);
};

struct EntityRecord {
    EntityId id;
    std::vector<Statement> statements;
};

// The map p -> W(p) over all ingested properties, after translation and
// load-time filtering. Immutable once built; safe to share across readers.
class KnowledgeGraph {
public:
    explicit KnowledgeGraph(GraphOptions options = {}) : options_(options) {}

    const GraphOptions& options() const { return options_; }

    // Translates, filters and stores statements. Kept entities are assigned
    // first-appearance ordinals (subject before value) used later for
    // deterministic object ordering.
    void add_statements(std::span<const Statement> statements, const TranslationMap* translations);

    std::span<const Statement> relation(const EntityId& property) const;
    std::vector<EntityId> properties() const; // sorted, nonempty relations only

    // Direct instance-of lookup; no subclass closure.
    std::span<const EntityId> instances_of(const EntityId& entity) const;

    const std::vector<EntityId>& entities() const { return entities_; }
    std::optional<std::uint32_t> entity_ordinal(const EntityId& entity) const;

    std::size_t statement_count() const { return statement_count_; }

private:
    void register_entity(const EntityId& e);

    GraphOptions options_;
    std::unordered_map<EntityId, std::vector<Statement>, EntityIdHash> relations_;
    std::unordered_map<EntityId, std::vector<EntityId>, EntityIdHash> class_edges_;
    std::unordered_map<EntityId, std::uint32_t, EntityIdHash> entity_ordinal_;
    std::vector<EntityId> entities_; // first-appearance order
    std::size_t statement_count_ = 0;
};

// Builds a graph from parsed records: statements are rewritten by
// `translations` (when given) and then filtered.
KnowledgeGraph build_graph(std::span<const EntityRecord> records,
                           const TranslationMap* translations = nullptr, GraphOptions options = {});

} // namespace kgfca

#include "kgfca/knowledge_graph.hpp"

#include <algorithm>

namespace kgfca {

void KnowledgeGraph::register_entity(const EntityId& e) {
    auto [it, inserted] = entity_ordinal_.try_emplace(e, static_cast<std::uint32_t>(entities_.size()));
    if (inserted) entities_.push_back(e);
}

void KnowledgeGraph::add_statements(std::span<const Statement> statements,
                                    const TranslationMap* translations) {
    for (const Statement& original : statements) {
        std::vector<Statement> rewritten =
            translations ? apply_property_translations(original, *translations)
                         : std::vector<Statement>{original};
        for (Statement& s : rewritten) {
            if (!keep_statement(s)) continue;
            register_entity(s.subject);
            if (const EntityId* object = s.value.as_entity()) register_entity(*object);
            if (s.property == options_.instance_of) {
                if (const EntityId* cls = s.value.as_entity()) {
                    auto& classes = class_edges_[s.subject];
                    auto pos = std::lower_bound(classes.begin(), classes.end(), *cls);
                    if (pos == classes.end() || *pos != *cls) classes.insert(pos, *cls);
                }
            }
            EntityId property = s.property;
            relations_[property].push_back(std::move(s));
            ++statement_count_;
        }
    }
}

std::span<const Statement> KnowledgeGraph::relation(const EntityId& property) const {
    auto it = relations_.find(property);
    if (it == relations_.end()) return {};
    return it->second;
}

std::vector<EntityId> KnowledgeGraph::properties() const {
    std::vector<EntityId> out;
    out.reserve(relations_.size());
    for (const auto& [p, statements] : relations_)
        if (!statements.empty()) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

std::span<const EntityId> KnowledgeGraph::instances_of(const EntityId& entity) const {
    auto it = class_edges_.find(entity);
    if (it == class_edges_.end()) return {};
    return it->second;
}

std::optional<std::uint32_t> KnowledgeGraph::entity_ordinal(const EntityId& entity) const {
    auto it = entity_ordinal_.find(entity);
    if (it == entity_ordinal_.end()) return std::nullopt;
    return it->second;
}

KnowledgeGraph build_graph(std::span<const EntityRecord> records,
                           const TranslationMap* translations, GraphOptions options) {
    KnowledgeGraph g(options);
    for (const EntityRecord& record : records) g.add_statements(record.statements, translations);
    return g;
}

} // namespace kgfca

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace kgfca {

enum class EntityKind : std::uint8_t { item, property };

// Identifier of a knowledge-graph entity: "Q<n>" for items, "P<n>" for
// properties, n >= 1.
struct EntityId {
    EntityKind kind = EntityKind::item;
    std::uint64_t number = 1;

    static constexpr EntityId item(std::uint64_t n) { return {EntityKind::item, n}; }
    static constexpr EntityId property(std::uint64_t n) { return {EntityKind::property, n}; }

    // Parses the canonical text form. Returns nullopt for anything else
    // (lexeme ids, zero, junk suffixes, overflow).
    static std::optional<EntityId> parse(std::string_view text);

    std::string to_string() const;

    bool is_property() const { return kind == EntityKind::property; }
    bool is_item() const { return kind == EntityKind::item; }

    auto operator<=>(const EntityId&) const = default;
};

struct EntityIdHash {
    std::size_t operator()(const EntityId& id) const {
        std::uint64_t v = id.number << 1 | static_cast<std::uint64_t>(id.kind);
        return std::hash<std::uint64_t>{}(v);
    }
};

} // namespace kgfca

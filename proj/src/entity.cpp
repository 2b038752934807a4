#include "kgfca/entity.hpp"

namespace kgfca {

std::optional<EntityId> EntityId::parse(std::string_view text) {
    if (text.size() < 2) return std::nullopt;
    EntityKind kind;
    switch (text[0]) {
    case 'Q': kind = EntityKind::item; break;
    case 'P': kind = EntityKind::property; break;
    default: return std::nullopt;
    }
    std::uint64_t number = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') return std::nullopt;
        if (number > (UINT64_MAX - (c - '0')) / 10) return std::nullopt;
        number = number * 10 + static_cast<std::uint64_t>(c - '0');
    }
    if (number == 0) return std::nullopt;
    return EntityId{kind, number};
}

std::string EntityId::to_string() const {
    return (kind == EntityKind::item ? "Q" : "P") + std::to_string(number);
}

} // namespace kgfca

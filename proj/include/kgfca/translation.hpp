#pragma once

#include "kgfca/statement.hpp"

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <vector>

namespace kgfca {

// Rewrite rule for a retired property: statements are moved to `target`,
// optionally gaining an extra qualifier, and optionally spawning a companion
// statement on the original object.
struct TranslationRule {
    EntityId target;
    std::optional<Snak> qualifier;
    std::optional<Snak> companion;
};

using TranslationMap = std::map<EntityId, TranslationRule>;

// Rewrites one statement. Statements whose property is not mapped pass
// through unchanged as a singleton. A companion rule only fires when the
// original value is an entity (the companion's subject).
std::vector<Statement> apply_property_translations(const Statement& s, const TranslationMap& map);

// The stock map for the eight retired properties replaced in the historical
// data sets: brother/sister -> sibling, grandparent -> relative (with a
// type-of-kinship qualifier), taxonomic order/family -> parent taxon (with a
// taxon-rank companion on the object), GND main type and administrative
// entity -> instance of, language family -> subclass of.
const TranslationMap& default_translation_map();

// Line format: "SRC -> TGT [qualifier PROP=VALUE] [companion PROP=VALUE]".
// VALUE is an entity id when it parses as one, a plain string otherwise.
// '#' starts a comment; blank lines are skipped.
TranslationMap read_translation_map(std::istream& in);
TranslationMap read_translation_map_file(const std::filesystem::path& path);

} // namespace kgfca

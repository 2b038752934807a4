#pragma once

#include "kgfca/assoc_rules.hpp"
#include "kgfca/fca.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace kgfca {

// Named view of an implication base: attribute names indexed by position.
struct NamedBase {
    std::vector<std::string> attributes;
    std::vector<Implication> implications;
    // Object count of the originating context (0 when unknown); lets record
    // files carry exact supports.
    std::size_t object_count = 0;
    std::vector<std::size_t> support_counts; // parallel to implications, may be empty
};

// Text form, one rule per line: "A1,A2 -> B1,B2" with the conclusion printed
// as the set difference. An empty premise prints as "-> B1,B2". When support
// counts are present each line gains an exact rational annotation:
// "A1,A2 -> B1,B2 ; supp=3/4". Attribute names are the context's labels;
// names must not contain ',' or " -> ".
void write_rules_text(const NamedBase& base, std::ostream& out);
NamedBase read_rules_text(std::istream& in);

// Structured record form (JSON lines). The first record is a header:
//   {"attributes":[...],"object_count":N}
// then one record per rule:
//   {"premise":[...],"conclusion":[...],"support_count":K}
// Attribute lists are name arrays; counts keep supports exact.
void write_rules_records(const NamedBase& base, std::ostream& out);
NamedBase read_rules_records(std::istream& in);

void write_rules_text_file(const NamedBase& base, const std::filesystem::path& path);
NamedBase read_rules_text_file(const std::filesystem::path& path);
void write_rules_records_file(const NamedBase& base, const std::filesystem::path& path);
NamedBase read_rules_records_file(const std::filesystem::path& path);

// Association-rule report. Text form keeps metrics exact:
//   "A -> B ; supp=2/4 conf=2/3"
// (supp = rule_count/object_count, conf = rule_count/premise_count).
// Record form adds premise_count to each rule record.
struct NamedRules {
    std::vector<std::string> attributes;
    std::vector<AssociationRule> rules;
    std::size_t object_count = 0;
};

void write_assoc_rules_text(const NamedRules& rules, std::ostream& out);
NamedRules read_assoc_rules_text(std::istream& in);
void write_assoc_rules_records(const NamedRules& rules, std::ostream& out);
NamedRules read_assoc_rules_records(std::istream& in);

void write_assoc_rules_text_file(const NamedRules& rules, const std::filesystem::path& path);
NamedRules read_assoc_rules_text_file(const std::filesystem::path& path);
void write_assoc_rules_records_file(const NamedRules& rules, const std::filesystem::path& path);
NamedRules read_assoc_rules_records_file(const std::filesystem::path& path);

} // namespace kgfca

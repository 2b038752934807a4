#pragma once

// Shared fixtures: the four-person family cross table, the dump snippets
// behind it, and generators for randomized property tests.

#include "kgfca/formal_context.hpp"
#include "kgfca/knowledge_graph.hpp"

#include <filesystem>
#include <random>
#include <string>

namespace kgfca::testing {

// The 4x3 family context:
//              godparent isMother mother
//   AngelinaJolie  X        X       X
//   MileyCyrus     X        .       X
//   NaomiWatts     .        X       X
//   Victoria       X        X       X
// Its canonical base is exactly { {} -> {mother} }.
FormalContext family_table();

// Dump whose directed context (P25 = mother as @subj/@obj, P1290 = godparent
// as @subj) reproduces family_table with canonical attribute names.
std::string family_dump_text();

// The mixed fixture dump: spouse statements with start/end-time qualifiers,
// a deprecated planet statement, a preferred population statement with
// qualifiers, some-value/no-value statements, instance-of edges and one
// property-class record. At most 20 statements.
std::string mixed_dump_text();

// Every object lacks exactly one distinct attribute; all subsets are intents.
FormalContext contranominal(std::size_t n);

// Full incidence.
FormalContext full_context(std::size_t objects, std::size_t attributes);

FormalContext random_context(std::mt19937_64& rng, std::size_t max_objects,
                             std::size_t max_attributes);

// Builds a graph directly from in-memory statements (no translations).
KnowledgeGraph graph_of(const std::vector<Statement>& statements, GraphOptions options = {});

Statement make_statement(const std::string& subject, const std::string& property,
                         const std::string& object_entity, Rank rank = Rank::normal);

std::filesystem::path write_temp_file(const std::string& name, const std::string& content);

} // namespace kgfca::testing

#pragma once

#include "kgfca/knowledge_graph.hpp"
#include "kgfca/statement.hpp"

#include <filesystem>
#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <set>
#include <string>

namespace kgfca {

// Which properties to keep while streaming. Statements of unselected
// properties are dropped at parse time; rank/special-value filtering happens
// later, in the graph build.
struct PropertySelection {
    bool all = false;
    std::set<EntityId> properties;

    static PropertySelection everything() { return {true, {}}; }
    static PropertySelection of(std::set<EntityId> props) { return {false, std::move(props)}; }

    bool contains(const EntityId& p) const { return all || properties.count(p) > 0; }
    bool empty() const { return !all && properties.empty(); }
};

struct ParseOptions {
    PropertySelection selection = PropertySelection::everything();
    // strict: malformed records abort the stream. Otherwise they are
    // skipped, counted, and reported through on_record_error.
    bool strict = false;
    std::function<void(std::size_t line, const std::string& what)> on_record_error;
};

struct ParseStats {
    std::size_t lines = 0;
    std::size_t records = 0;
    std::size_t skipped_records = 0;    // malformed, non-strict mode
    std::size_t unsupported_records = 0; // lexemes and other non-item/property entities
    std::size_t statements = 0;         // statements yielded
};

// Pull parser over an entity dump: one JSON record per line, optional "[" /
// "]" wrapper lines, trailing commas tolerated. Memory use is bounded by the
// largest single record. Yields records in stream order.
class DumpReader {
public:
    // Non-owning; the stream must outlive the reader.
    DumpReader(std::istream& in, ParseOptions options);
    // Owning; decompresses .gz (zlib) and .bz2 (external bzip2 filter)
    // by file suffix, anything else is read as plain text.
    static DumpReader open_file(const std::filesystem::path& path, ParseOptions options);

    DumpReader(DumpReader&&) = default;
    DumpReader& operator=(DumpReader&&) = default;

    // Next record, or nullopt at clean end of stream. Throws ParseError on
    // fatal conditions (truncated wrapper, undecodable compressed data), and
    // on malformed records in strict mode.
    std::optional<EntityRecord> next();

    const ParseStats& stats() const { return stats_; }

private:
    std::unique_ptr<std::istream> owned_;
    std::istream* in_;
    ParseOptions options_;
    ParseStats stats_;
    std::size_t line_no_ = 0;
    bool saw_opening_bracket_ = false;
    bool saw_closing_bracket_ = false;
    bool finished_ = false;
};

// Reads a selection file: one property id per line, '#' comments allowed.
// Lines may carry @subj/@obj suffixes for the directed problems; this reader
// returns bare properties, read_directed_selection keeps the directions.
std::set<EntityId> read_property_selection(std::istream& in);
std::set<EntityId> read_property_selection_file(const std::filesystem::path& path);

// Drains a reader into a graph.
KnowledgeGraph build_graph(DumpReader& reader, const TranslationMap* translations = nullptr,
                           GraphOptions options = {});

} // namespace kgfca

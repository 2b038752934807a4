// kgfca: extract formal contexts from entity dumps and mine implication and
// association-rule bases from them.

#include "kgfca/assoc_rules.hpp"
#include "kgfca/context_builders.hpp"
#include "kgfca/dump_parser.hpp"
#include "kgfca/error.hpp"
#include "kgfca/fca.hpp"
#include "kgfca/pac.hpp"
#include "kgfca/rule_io.hpp"
#include "kgfca/translation.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <unordered_map>

using namespace kgfca;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_not_entailed = 1; // also: budget exceeded, validation-mode failure
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

struct ContextConfig {
    std::string dump;
    std::string problem = "plain";
    std::string properties_file;
    std::string property_class;
    std::string translations_file;
    bool default_translations = false;
    std::string instance_of = "P31";
    std::string subclass_of = "P279";
    std::vector<std::string> qualifier_props;
    std::optional<std::uint32_t> max_qualifier_values;
    std::vector<std::string> class_filter;
    bool include_rank = false;
    bool strict = false;
    std::string out;
};

EntityId parse_property_flag(const std::string& text, const std::string& flag) {
    auto id = EntityId::parse(text);
    if (!id || !id->is_property())
        throw ValidationError(flag + ": '" + text + "' is not a property id");
    return *id;
}

EntityId parse_item_flag(const std::string& text, const std::string& flag) {
    auto id = EntityId::parse(text);
    if (!id) throw ValidationError(flag + ": '" + text + "' is not an entity id");
    return *id;
}

ParseOptions make_parse_options(const ContextConfig& cfg, PropertySelection selection) {
    ParseOptions options;
    options.selection = std::move(selection);
    options.strict = cfg.strict;
    options.on_record_error = [](std::size_t line, const std::string& what) {
        std::cerr << "warning: skipping malformed record at line " << line << ": " << what
                  << "\n";
    };
    return options;
}

KnowledgeGraph load_graph(const ContextConfig& cfg, const std::set<EntityId>& bare_properties,
                          bool need_instance_of, const TranslationMap* translations,
                          const GraphOptions& graph_options) {
    std::set<EntityId> selection = bare_properties;
    if (need_instance_of) selection.insert(graph_options.instance_of);
    // retired sources must be parsed for their targets to materialise
    if (translations)
        for (const auto& [source, rule] : *translations)
            if (selection.count(rule.target) ||
                (rule.companion && selection.count(rule.companion->property)))
                selection.insert(source);
    DumpReader reader =
        DumpReader::open_file(cfg.dump, make_parse_options(cfg, PropertySelection::of(selection)));
    KnowledgeGraph g = build_graph(reader, translations, graph_options);
    std::cerr << "parsed " << reader.stats().records << " records, kept " << g.statement_count()
              << " statements";
    if (reader.stats().skipped_records)
        std::cerr << " (" << reader.stats().skipped_records << " records skipped)";
    std::cerr << "\n";
    return g;
}

std::set<EntityId> resolve_class_selection(const ContextConfig& cfg, const EntityId& cls,
                                           const GraphOptions& graph_options) {
    // first pass: only instance-of statements, enough to find the property class
    DumpReader reader = DumpReader::open_file(
        cfg.dump, make_parse_options(cfg, PropertySelection::of({graph_options.instance_of})));
    KnowledgeGraph g = build_graph(reader, nullptr, graph_options);
    std::set<EntityId> props = select_properties_by_class(g, cls);
    std::cerr << "property class " << cls.to_string() << " resolved to " << props.size()
              << " properties\n";
    return props;
}

int cmd_context(const ContextConfig& cfg) {
    if (cfg.properties_file.empty() == cfg.property_class.empty())
        throw ValidationError("exactly one of --properties and --property-class is required");

    GraphOptions graph_options;
    graph_options.instance_of = parse_property_flag(cfg.instance_of, "--instance-of");
    graph_options.subclass_of = parse_property_flag(cfg.subclass_of, "--subclass-of");

    TranslationMap translations;
    const TranslationMap* translations_ptr = nullptr;
    if (!cfg.translations_file.empty()) {
        translations = read_translation_map_file(cfg.translations_file);
        translations_ptr = &translations;
    } else if (cfg.default_translations) {
        translations = default_translation_map();
        translations_ptr = &translations;
    }

    std::set<DirectedProperty> directed_props;
    std::set<EntityId> bare_props;
    if (!cfg.properties_file.empty()) {
        directed_props = read_directed_selection_file(cfg.properties_file);
        for (const auto& [p, dir] : directed_props) bare_props.insert(p);
    } else {
        EntityId cls = parse_item_flag(cfg.property_class, "--property-class");
        bare_props = resolve_class_selection(cfg, cls, graph_options);
        if (bare_props.empty()) throw ValidationError("property class resolves to no properties");
        for (const EntityId& p : bare_props) {
            directed_props.emplace(p, Direction::subject);
            directed_props.emplace(p, Direction::object);
        }
    }
    if (bare_props.empty()) throw ValidationError("the property selection is empty");

    bool need_instance_of = cfg.problem == "classified" || cfg.problem == "union";
    KnowledgeGraph g =
        load_graph(cfg, bare_props, need_instance_of, translations_ptr, graph_options);

    QualifiedOptions qualified_options;
    if (!cfg.qualifier_props.empty()) {
        std::set<EntityId> filter;
        for (const auto& text : cfg.qualifier_props)
            filter.insert(parse_property_flag(text, "--qualifier-props"));
        qualified_options.qualifier_filter = std::move(filter);
    }
    qualified_options.max_values_per_qualifier = cfg.max_qualifier_values;
    qualified_options.include_rank = cfg.include_rank;

    std::optional<std::set<EntityId>> class_filter;
    if (!cfg.class_filter.empty()) {
        std::set<EntityId> filter;
        for (const auto& text : cfg.class_filter)
            filter.insert(parse_item_flag(text, "--class-filter"));
        class_filter = std::move(filter);
    }

    FormalContext k;
    if (cfg.problem == "plain") {
        k = build_plain(g, bare_props);
    } else if (cfg.problem == "directed") {
        k = build_directed(g, directed_props);
    } else if (cfg.problem == "qualified") {
        k = build_qualified(g, directed_props, qualified_options);
    } else if (cfg.problem == "classified") {
        k = build_classified(g, directed_props, class_filter);
    } else if (cfg.problem == "union") {
        k = build_plain(g, bare_props);
        k = union_contexts(k, build_directed(g, directed_props));
        k = union_contexts(k, build_qualified(g, directed_props, qualified_options));
        k = union_contexts(k, build_classified(g, directed_props, class_filter));
    } else {
        throw ValidationError("unknown problem variant '" + cfg.problem + "'");
    }

    if (k.attributes.empty()) throw ValidationError("empty context: nothing to write");

    write_burmeister_file(k, cfg.out);
    ContextStats s = stats(k);

    std::vector<std::pair<std::string, std::string>> meta;
    meta.emplace_back("command", "context");
    meta.emplace_back("dump", cfg.dump);
    meta.emplace_back("problem", cfg.problem);
    if (!cfg.properties_file.empty()) meta.emplace_back("properties_file", cfg.properties_file);
    if (!cfg.property_class.empty()) meta.emplace_back("property_class", cfg.property_class);
    {
        std::string list;
        for (const EntityId& p : bare_props) list += (list.empty() ? "" : ",") + p.to_string();
        meta.emplace_back("properties", list);
    }
    meta.emplace_back("instance_of", graph_options.instance_of.to_string());
    if (translations_ptr)
        meta.emplace_back("translations",
                          cfg.translations_file.empty() ? "default" : cfg.translations_file);
    if (qualified_options.qualifier_filter) {
        std::string list;
        for (const EntityId& p : *qualified_options.qualifier_filter)
            list += (list.empty() ? "" : ",") + p.to_string();
        meta.emplace_back("qualifier_props", list);
    }
    if (qualified_options.max_values_per_qualifier)
        meta.emplace_back("max_qualifier_values",
                          std::to_string(*qualified_options.max_values_per_qualifier));
    if (qualified_options.include_rank) meta.emplace_back("include_rank", "true");
    if (class_filter) {
        std::string list;
        for (const EntityId& c : *class_filter) list += (list.empty() ? "" : ",") + c.to_string();
        meta.emplace_back("class_filter", list);
    }
    meta.emplace_back("objects", std::to_string(s.object_count));
    meta.emplace_back("attributes", std::to_string(s.attribute_count));
    meta.emplace_back("incidences", std::to_string(s.incidence_count));
    char density[32];
    std::snprintf(density, sizeof density, "%.6f", s.density);
    meta.emplace_back("density", density);
    write_metadata_file(cfg.out + ".meta", meta);

    std::cout << "objects=" << s.object_count << " attributes=" << s.attribute_count
              << " incidences=" << s.incidence_count << " density=" << density << "\n";
    return exit_ok;
}

NamedBase named_base_of(const FormalContext& k, const ImplicationBase& base) {
    NamedBase named;
    named.attributes = k.attributes;
    named.implications = base.implications;
    named.object_count = k.objects.size();
    DerivationKernel kernel(k);
    for (const Implication& imp : base.implications)
        named.support_counts.push_back(kernel.extent(imp.premise).count());
    return named;
}

NamedBase filter_supported(const NamedBase& named) {
    NamedBase out;
    out.attributes = named.attributes;
    out.object_count = named.object_count;
    for (std::size_t i = 0; i < named.implications.size(); ++i) {
        if (named.support_counts[i] == 0) continue;
        out.implications.push_back(named.implications[i]);
        out.support_counts.push_back(named.support_counts[i]);
    }
    return out;
}

int cmd_base(const std::string& context_file, const std::string& out, bool only_supported,
             std::optional<double> budget_seconds) {
    FormalContext k = read_burmeister_file(context_file);

    CancelFn cancelled;
    if (budget_seconds) {
        auto deadline =
            std::chrono::steady_clock::now() + std::chrono::duration<double>(*budget_seconds);
        cancelled = [deadline] { return std::chrono::steady_clock::now() > deadline; };
    }

    ImplicationBase base;
    try {
        base = canonical_base(k, cancelled);
    } catch (const Cancelled&) {
        std::cerr << "error: wall-clock budget exceeded while computing the canonical base\n";
        return exit_not_entailed;
    }

    NamedBase named = named_base_of(k, base);
    std::size_t supported = 0;
    for (std::size_t count : named.support_counts)
        if (count > 0) ++supported;
    NamedBase output = only_supported ? filter_supported(named) : named;
    write_rules_text_file(output, out);
    write_rules_records_file(output, out + ".jsonl");

    std::cout << "base=" << base.implications.size() << " supported=" << supported << "\n";
    return exit_ok;
}

int cmd_luxenburger(const std::string& context_file, const std::string& out, double minsupp,
                    double minconf) {
    FormalContext k = read_burmeister_file(context_file);
    NamedRules rules;
    rules.attributes = k.attributes;
    rules.object_count = k.objects.size();
    rules.rules = luxenburger_base(k, minsupp, minconf);
    write_assoc_rules_text_file(rules, out);
    write_assoc_rules_records_file(rules, out + ".jsonl");
    std::cout << "rules=" << rules.rules.size() << "\n";
    return exit_ok;
}

int cmd_pac(const std::string& context_file, const std::string& out, double epsilon, double delta,
            std::uint64_t seed, bool validate) {
    FormalContext k = read_burmeister_file(context_file);
    PacParams params{epsilon, delta, seed};
    PacRunInfo info;
    ImplicationBase base = pac_basis(k, params, &info);
    NamedBase named = named_base_of(k, base);
    write_rules_text_file(named, out);
    write_rules_records_file(named, out + ".jsonl");

    std::vector<std::pair<std::string, std::string>> manifest;
    manifest.emplace_back("command", "pac");
    manifest.emplace_back("context", context_file);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", epsilon);
    manifest.emplace_back("epsilon", buf);
    std::snprintf(buf, sizeof buf, "%.9g", delta);
    manifest.emplace_back("delta", buf);
    manifest.emplace_back("seed", std::to_string(seed));
    manifest.emplace_back("rules", std::to_string(base.implications.size()));
    manifest.emplace_back("equivalence_checks", std::to_string(info.equivalence_checks));
    manifest.emplace_back("counterexamples", std::to_string(info.counterexamples));
    manifest.emplace_back("samples_drawn", std::to_string(info.samples_drawn));

    int rc = exit_ok;
    if (validate) {
        double distance;
        if (k.attributes.size() <= 20) {
            distance = horn_distance(base, k);
            std::snprintf(buf, sizeof buf, "%.9g", distance);
            manifest.emplace_back("horn_distance", buf);
        } else {
            auto estimate = horn_distance_estimate(base, k, 200000, seed + 1);
            distance = estimate.estimate;
            std::snprintf(buf, sizeof buf, "%.9g", estimate.estimate);
            manifest.emplace_back("horn_distance_estimate", buf);
            std::snprintf(buf, sizeof buf, "%.9g", estimate.std_error);
            manifest.emplace_back("horn_distance_std_error", buf);
        }
        std::cout << "horn_distance=" << distance << "\n";
        if (distance > epsilon) rc = exit_not_entailed;
    }
    write_metadata_file(out + ".manifest", manifest);
    std::cout << "rules=" << base.implications.size()
              << " equivalence_checks=" << info.equivalence_checks << "\n";
    return rc;
}

// query syntax: "A1, A2 => B1, B2"
std::pair<std::vector<std::string>, std::vector<std::string>> parse_query(
    const std::string& query) {
    std::size_t arrow = query.find("=>");
    if (arrow == std::string::npos)
        throw ValidationError("query must look like 'A1, A2 => B1, B2'");
    auto split = [](const std::string& text) {
        std::vector<std::string> out;
        std::string current;
        std::istringstream in(text);
        while (std::getline(in, current, ',')) {
            std::size_t begin = current.find_first_not_of(" \t");
            std::size_t end = current.find_last_not_of(" \t");
            if (begin == std::string::npos) continue;
            out.push_back(current.substr(begin, end - begin + 1));
        }
        return out;
    };
    return {split(query.substr(0, arrow)), split(query.substr(arrow + 2))};
}

NamedBase load_rules(const std::string& path) {
    // records files start with the JSON header; anything else is text
    std::ifstream probe(path);
    if (!probe) throw ParseError("cannot open rules file: " + path);
    char first = 0;
    probe >> first;
    probe.close();
    if (first == '{') return read_rules_records_file(path);
    return read_rules_text_file(path);
}

int cmd_entails(const std::string& rules_file, const std::string& query) {
    NamedBase named = load_rules(rules_file);
    auto [premise_names, conclusion_names] = parse_query(query);

    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < named.attributes.size(); ++i)
        index.emplace(named.attributes[i], i);

    const std::size_t width = named.attributes.size();
    Bitset premise(width), conclusion(width);
    for (const auto& name : premise_names) {
        auto it = index.find(name);
        if (it == index.end()) throw ValidationError("unknown attribute '" + name + "'");
        premise.set(it->second);
    }
    for (const auto& name : conclusion_names) {
        auto it = index.find(name);
        if (it == index.end()) throw ValidationError("unknown attribute '" + name + "'");
        conclusion.set(it->second);
    }

    ImplicationBase base{width, named.implications};
    Bitset closed = lin_closure(base, premise);

    auto join = [&](const Bitset& set) {
        std::string out;
        set.for_each([&](std::size_t i) {
            if (!out.empty()) out += ",";
            out += named.attributes[i];
        });
        return out;
    };

    if (conclusion.subset_of(closed)) {
        std::cout << "entailed; closure: " << join(closed) << "\n";
        return exit_ok;
    }
    std::cout << "not entailed; missing: " << join(difference(conclusion, closed)) << "\n";
    return exit_not_entailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"formal contexts and implication bases from entity dumps"};
    app.require_subcommand(1);

    ContextConfig context_cfg;
    CLI::App* context = app.add_subcommand("context", "extract a formal context from a dump");
    context->add_option("--dump", context_cfg.dump, "entity dump (.json, .json.gz, .json.bz2)")
        ->required();
    context
        ->add_option("--problem", context_cfg.problem,
                     "incidence: plain|directed|qualified|classified|union")
        ->check(CLI::IsMember({"plain", "directed", "qualified", "classified", "union"}));
    context->add_option("--properties", context_cfg.properties_file,
                        "selection file, one property per line, optional @subj/@obj");
    context->add_option("--property-class", context_cfg.property_class,
                        "select all properties that are instances of this class");
    context->add_option("--translations", context_cfg.translations_file,
                        "property translation map file");
    context->add_flag("--default-translations", context_cfg.default_translations,
                      "apply the stock replacements for retired properties");
    context->add_option("--instance-of", context_cfg.instance_of, "class membership property");
    context->add_option("--subclass-of", context_cfg.subclass_of, "subclass property");
    context->add_option("--qualifier-props", context_cfg.qualifier_props,
                        "restrict qualified attributes to these qualifier properties");
    std::uint32_t max_values = 0;
    CLI::Option* max_values_option = context->add_option(
        "--max-qualifier-values", max_values, "keep only the k most frequent values per qualifier");
    context->add_option("--class-filter", context_cfg.class_filter,
                        "restrict classified attributes to these classes");
    context->add_flag("--include-rank", context_cfg.include_rank,
                      "expose statement rank as a pseudo-qualifier");
    context->add_flag("--strict", context_cfg.strict, "malformed records abort instead of skip");
    context->add_option("--out", context_cfg.out, "output context file (Burmeister)")->required();

    std::string base_context, base_out;
    bool only_supported = false;
    double budget = 0.0;
    CLI::App* base_cmd = app.add_subcommand("base", "compute the canonical implication base");
    base_cmd->add_option("--context", base_context, "context file")->required();
    base_cmd->add_option("--out", base_out, "output rules file")->required();
    base_cmd->add_flag("--only-supported", only_supported, "write only rules with support > 0");
    CLI::Option* budget_option =
        base_cmd->add_option("--wall-clock-budget", budget, "abort cleanly after this many seconds");

    std::string lux_context, lux_out;
    double minsupp = 0.0, minconf = 0.0;
    CLI::App* lux = app.add_subcommand("luxenburger", "mine the association-rule base");
    lux->add_option("--context", lux_context, "context file")->required();
    lux->add_option("--minsupp", minsupp, "minimum support")
        ->required()
        ->check(CLI::NonNegativeNumber);
    lux->add_option("--minconf", minconf, "minimum confidence")
        ->required()
        ->check(CLI::NonNegativeNumber);
    lux->add_option("--out", lux_out, "output rules file")->required();

    std::string pac_context, pac_out;
    double epsilon = 0.1, delta = 0.1;
    std::uint64_t seed = 0;
    bool validate = false;
    CLI::App* pac = app.add_subcommand("pac", "compute a probably approximately correct base");
    pac->add_option("--context", pac_context, "context file")->required();
    pac->add_option("--epsilon", epsilon, "accuracy, in (0,1]")->required();
    pac->add_option("--delta", delta, "failure probability, in (0,1]")->required();
    pac->add_option("--seed", seed, "random seed")->required();
    pac->add_flag("--validate", validate, "measure the horn distance and fail when > epsilon");
    pac->add_option("--out", pac_out, "output rules file")->required();

    std::string rules_file, query;
    CLI::App* entails_cmd = app.add_subcommand("entails", "decide entailment against a rules file");
    entails_cmd->add_option("--rules", rules_file, "rules file (text or records)")->required();
    entails_cmd->add_option("query", query, "implication query 'A1, A2 => B1, B2'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (context->parsed()) {
            if (max_values_option->count() > 0) context_cfg.max_qualifier_values = max_values;
            return cmd_context(context_cfg);
        }
        if (base_cmd->parsed()) {
            std::optional<double> budget_seconds;
            if (budget_option->count() > 0) budget_seconds = budget;
            return cmd_base(base_context, base_out, only_supported, budget_seconds);
        }
        if (lux->parsed()) return cmd_luxenburger(lux_context, lux_out, minsupp, minconf);
        if (pac->parsed()) return cmd_pac(pac_context, pac_out, epsilon, delta, seed, validate);
        if (entails_cmd->parsed()) return cmd_entails(rules_file, query);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    }
    return exit_usage;
}

#include "kgfca/context_builders.hpp"

#include "kgfca/error.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace kgfca {

namespace {

// Incidence accumulator keyed by attribute label; objects are entity
// ordinals so the final object order is first appearance in the dump.
class ContextAccumulator {
public:
    explicit ContextAccumulator(const KnowledgeGraph& g) : graph_(g) {}

    void add(const EntityId& object, const std::string& attribute_label) {
        auto ordinal = graph_.entity_ordinal(object);
        if (!ordinal) return; // unseen entities cannot be incident
        incidence_[attribute_label].push_back(*ordinal);
    }

    FormalContext build() {
        FormalContext k;
        // attribute order: canonical text
        k.attributes.reserve(incidence_.size());
        for (const auto& [label, objs] : incidence_) k.attributes.push_back(label);

        // object order: first appearance
        std::vector<std::uint32_t> ordinals;
        for (const auto& [label, objs] : incidence_)
            ordinals.insert(ordinals.end(), objs.begin(), objs.end());
        std::sort(ordinals.begin(), ordinals.end());
        ordinals.erase(std::unique(ordinals.begin(), ordinals.end()), ordinals.end());

        std::map<std::uint32_t, std::size_t> object_index;
        const auto& entities = graph_.entities();
        for (std::size_t i = 0; i < ordinals.size(); ++i) {
            object_index.emplace(ordinals[i], i);
            k.objects.push_back(entities[ordinals[i]].to_string());
        }

        k.rows.assign(k.objects.size(), Bitset(k.attributes.size()));
        std::size_t m = 0;
        for (const auto& [label, objs] : incidence_) {
            for (std::uint32_t ordinal : objs) k.rows[object_index.at(ordinal)].set(m);
            ++m;
        }
        return prune_empty(k); // already pruned by construction; keeps the contract visible
    }

private:
    const KnowledgeGraph& graph_;
    std::map<std::string, std::vector<std::uint32_t>> incidence_;
};

void require_nonempty(std::size_t size) {
    if (size == 0) throw ValidationError("property selection must be nonempty");
}

} // namespace

std::set<EntityId> select_properties_by_class(const KnowledgeGraph& g, const EntityId& cls) {
    std::set<EntityId> out;
    // class edges are only stored for statement subjects, so one entity scan suffices
    for (const EntityId& e : g.entities()) {
        if (!e.is_property()) continue;
        auto classes = g.instances_of(e);
        if (std::find(classes.begin(), classes.end(), cls) != classes.end()) out.insert(e);
    }
    return out;
}

FormalContext build_plain(const KnowledgeGraph& g, const std::set<EntityId>& properties) {
    require_nonempty(properties.size());
    ContextAccumulator acc(g);
    for (const EntityId& p : properties) {
        std::string label = AttributeSpec::plain(p).canonical();
        for (const Statement& t : g.relation(p)) acc.add(t.subject, label);
    }
    return acc.build();
}

FormalContext build_directed(const KnowledgeGraph& g, const std::set<DirectedProperty>& properties) {
    require_nonempty(properties.size());
    ContextAccumulator acc(g);
    for (const auto& [p, dir] : properties) {
        std::string label = AttributeSpec::directed(p, dir).canonical();
        for (const Statement& t : g.relation(p)) {
            if (dir == Direction::subject) {
                acc.add(t.subject, label);
            } else if (const EntityId* object = t.value.as_entity()) {
                acc.add(*object, label);
            }
        }
    }
    return acc.build();
}

namespace {

// Qualifier enumeration shared by frequency counting and incidence: real
// qualifiers pass the property filter; the rank pseudo-qualifier is
// controlled by its own flag.
template <typename Fn>
void for_each_qualifier(const Statement& t, const QualifiedOptions& options, Fn&& fn) {
    for (const Snak& snak : t.annotation) {
        if (options.qualifier_filter && !options.qualifier_filter->count(snak.property)) continue;
        fn(std::optional<EntityId>(snak.property), snak.value);
    }
    if (options.include_rank)
        fn(std::optional<EntityId>(), DataValue::string(rank_name(t.rank)));
}

} // namespace

FormalContext build_qualified(const KnowledgeGraph& g, const std::set<DirectedProperty>& properties,
                              const QualifiedOptions& options) {
    require_nonempty(properties.size());

    // endpoint of a statement for a colour; nullopt when the colour does not
    // apply (non-entity object)
    auto endpoint = [](const Statement& t, Direction dir) -> std::optional<EntityId> {
        if (dir == Direction::subject) return t.subject;
        if (const EntityId* object = t.value.as_entity()) return *object;
        return std::nullopt;
    };

    // value cap: per (p, dir, qualifier) keep the most frequent values, ties
    // by canonical text
    struct Kept {
        bool keep_all = true;
        std::set<std::string> values; // canonical forms
    };
    std::map<std::string, Kept> kept_per_key; // key: "P26@subj?P580"
    auto qualifier_key = [](const EntityId& p, Direction dir, const std::optional<EntityId>& q) {
        return p.to_string() + "@" + direction_suffix(dir) + "?" +
               (q ? q->to_string() : std::string("rank"));
    };

    if (options.max_values_per_qualifier) {
        std::map<std::string, std::map<std::string, std::size_t>> counts;
        for (const auto& [p, dir] : properties) {
            for (const Statement& t : g.relation(p)) {
                if (!endpoint(t, dir)) continue;
                for_each_qualifier(t, options, [&](std::optional<EntityId> q, const DataValue& v) {
                    counts[qualifier_key(p, dir, q)][v.canonical()] += 1;
                });
            }
        }
        for (auto& [key, value_counts] : counts) {
            std::vector<std::pair<std::string, std::size_t>> ranked(value_counts.begin(),
                                                                    value_counts.end());
            std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
                if (a.second != b.second) return a.second > b.second;
                return a.first < b.first;
            });
            Kept kept;
            kept.keep_all = false;
            for (std::size_t i = 0; i < ranked.size() && i < *options.max_values_per_qualifier; ++i)
                kept.values.insert(ranked[i].first);
            kept_per_key[key] = std::move(kept);
        }
    }

    auto value_kept = [&](const EntityId& p, Direction dir, const std::optional<EntityId>& q,
                          const DataValue& v) {
        if (!options.max_values_per_qualifier) return true;
        auto it = kept_per_key.find(qualifier_key(p, dir, q));
        if (it == kept_per_key.end()) return true;
        return it->second.keep_all || it->second.values.count(v.canonical()) > 0;
    };

    ContextAccumulator acc(g);
    for (const auto& [p, dir] : properties) {
        for (const Statement& t : g.relation(p)) {
            auto e = endpoint(t, dir);
            if (!e) continue;
            for_each_qualifier(t, options, [&](std::optional<EntityId> q, const DataValue& v) {
                if (!value_kept(p, dir, q, v)) return;
                AttributeSpec spec = q ? AttributeSpec::qualified(p, dir, *q, v)
                                       : AttributeSpec::rank_qualified(p, dir, t.rank);
                acc.add(*e, spec.canonical());
            });
        }
    }
    return acc.build();
}

FormalContext build_classified(const KnowledgeGraph& g, const std::set<DirectedProperty>& properties,
                               const std::optional<std::set<EntityId>>& class_filter) {
    require_nonempty(properties.size());
    auto class_allowed = [&](const EntityId& cls) {
        return !class_filter || class_filter->count(cls) > 0;
    };

    ContextAccumulator acc(g);
    for (const auto& [p, dir] : properties) {
        for (const Statement& t : g.relation(p)) {
            const EntityId* object = t.value.as_entity();
            if (!object) continue;
            for (const EntityId& cls : g.instances_of(*object)) {
                if (!class_allowed(cls)) continue;
                std::string label = AttributeSpec::classified(p, dir, cls).canonical();
                // subject colour: the statement's subject, via its object's class;
                // object colour: the object itself, via its own class
                acc.add(dir == Direction::subject ? t.subject : *object, label);
            }
        }
    }
    return acc.build();
}

std::set<DirectedProperty> read_directed_selection(std::istream& in) {
    std::set<DirectedProperty> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token) {
            std::size_t at = token.find('@');
            std::string id_text = at == std::string::npos ? token : token.substr(0, at);
            auto id = EntityId::parse(id_text);
            if (!id || !id->is_property())
                throw ParseError("selection file: bad property '" + token + "'", line_no);
            if (at == std::string::npos) {
                out.emplace(*id, Direction::subject);
                out.emplace(*id, Direction::object);
            } else {
                std::string suffix = token.substr(at + 1);
                if (suffix == "subj")
                    out.emplace(*id, Direction::subject);
                else if (suffix == "obj")
                    out.emplace(*id, Direction::object);
                else
                    throw ParseError("selection file: bad direction '" + suffix + "'", line_no);
            }
        }
    }
    return out;
}

std::set<DirectedProperty> read_directed_selection_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open selection file: " + path.string());
    return read_directed_selection(in);
}

} // namespace kgfca

#include "kgfca/assoc_rules.hpp"

#include "kgfca/error.hpp"

#include <algorithm>
#include <map>

namespace kgfca {

namespace {

// Single support predicate for the entire module: count/|G| >= minsupp via
// double division, exactly as reported in the outputs.
bool meets_min_support(std::size_t count, std::size_t object_count, double minsupp) {
    if (object_count == 0) return false;
    return static_cast<double>(count) / static_cast<double>(object_count) >= minsupp;
}

bool meets_min_confidence(std::size_t rule_count, std::size_t premise_count, double minconf) {
    if (premise_count == 0) return false;
    return static_cast<double>(rule_count) / static_cast<double>(premise_count) >= minconf;
}

} // namespace

IcebergLattice frequent_closed(const FormalContext& k, double minsupp) {
    DerivationKernel kernel(k);
    const std::size_t m = kernel.attribute_count();
    const std::size_t g = kernel.object_count();

    IcebergLattice lattice;
    lattice.object_count = g;

    if (m == 0 && g == 0) {
        // single concept (∅, ∅) with support treated as vacuous
        if (minsupp <= 0.0)
            lattice.nodes.push_back(IcebergNode{Bitset(0), 0});
        return lattice;
    }

    Bitset top_extent = Bitset::full(g);
    Bitset bottom = kernel.intent(top_extent); // closure(∅)
    if (!meets_min_support(top_extent.count(), g, minsupp)) return lattice;

    // Close-by-One descent with support pruning: every closed set below a
    // node contains it, so an infrequent node closes its whole subtree.
    struct Frame {
        Bitset intent;
        Bitset extent;
        std::size_t next_attribute;
    };
    std::vector<IcebergNode> nodes;
    std::vector<Bitset> extents; // parallel to nodes
    std::vector<Frame> stack;
    stack.push_back(Frame{bottom, top_extent, 0});
    nodes.push_back(IcebergNode{bottom, top_extent.count()});
    extents.push_back(top_extent);

    while (!stack.empty()) {
        Frame frame = std::move(stack.back());
        stack.pop_back();
        for (std::size_t i = frame.next_attribute; i < m; ++i) {
            if (frame.intent.test(i)) continue;
            Bitset extent = frame.extent & kernel.column(i);
            std::size_t count = extent.count();
            if (!meets_min_support(count, g, minsupp)) continue;
            Bitset intent = kernel.closure_of_extent(extent);
            // canonical generation: nothing new below i
            Bitset added = difference(intent, frame.intent);
            if (added.find_next(0) < i) continue;
            nodes.push_back(IcebergNode{intent, count});
            extents.push_back(extent);
            stack.push_back(Frame{std::move(intent), std::move(extent), i + 1});
        }
    }

    // lectic order of intents, extents following along
    std::vector<std::size_t> order(nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return lectic_less(nodes[a].intent, nodes[b].intent);
    });
    lattice.nodes.reserve(nodes.size());
    std::vector<Bitset> sorted_extents;
    sorted_extents.reserve(nodes.size());
    for (std::size_t i : order) {
        lattice.nodes.push_back(std::move(nodes[i]));
        sorted_extents.push_back(std::move(extents[i]));
    }

    // covering relation via single-attribute extensions: the upper covers of
    // B are the minimal frequent closures of B ∪ {m}
    std::map<Bitset, std::size_t> node_index;
    for (std::size_t i = 0; i < lattice.nodes.size(); ++i)
        node_index.emplace(lattice.nodes[i].intent, i);

    for (std::size_t lower = 0; lower < lattice.nodes.size(); ++lower) {
        const Bitset& intent = lattice.nodes[lower].intent;
        const Bitset& extent = sorted_extents[lower];
        std::vector<Bitset> candidates;
        for (std::size_t i = 0; i < m; ++i) {
            if (intent.test(i)) continue;
            Bitset candidate_extent = extent & kernel.column(i);
            if (!meets_min_support(candidate_extent.count(), g, minsupp)) continue;
            candidates.push_back(kernel.closure_of_extent(candidate_extent));
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const Bitset& a, const Bitset& b) { return a.count() < b.count(); });
        std::vector<Bitset> minimal;
        for (const Bitset& c : candidates) {
            bool dominated = false;
            for (const Bitset& kept : minimal)
                if (kept.subset_of(c)) {
                    dominated = true;
                    break;
                }
            if (!dominated) minimal.push_back(c);
        }
        for (const Bitset& upper : minimal)
            lattice.covers.emplace_back(lower, node_index.at(upper));
    }
    std::sort(lattice.covers.begin(), lattice.covers.end());
    return lattice;
}

std::vector<AssociationRule> luxenburger_base(const IcebergLattice& lattice, double minconf) {
    std::vector<AssociationRule> rules;
    for (const auto& [lower, upper] : lattice.covers) {
        const IcebergNode& b1 = lattice.nodes[lower];
        const IcebergNode& b2 = lattice.nodes[upper];
        if (!meets_min_confidence(b2.support_count, b1.support_count, minconf)) continue;
        AssociationRule rule;
        rule.premise = b1.intent;
        rule.conclusion = difference(b2.intent, b1.intent);
        rule.rule_count = b2.support_count;
        rule.premise_count = b1.support_count;
        rule.object_count = lattice.object_count;
        rules.push_back(std::move(rule));
    }
    std::sort(rules.begin(), rules.end(), [](const AssociationRule& a, const AssociationRule& b) {
        if (a.rule_count != b.rule_count) return a.rule_count > b.rule_count; // descending support
        // descending confidence, compared exactly by cross-multiplication
        std::uint64_t left = static_cast<std::uint64_t>(a.rule_count) * b.premise_count;
        std::uint64_t right = static_cast<std::uint64_t>(b.rule_count) * a.premise_count;
        if (left != right) return left > right;
        if (a.premise != b.premise) return lectic_less(a.premise, b.premise);
        return lectic_less(a.conclusion, b.conclusion);
    });
    return rules;
}

std::vector<AssociationRule> luxenburger_base(const FormalContext& k, double minsupp, double minconf) {
    return luxenburger_base(frequent_closed(k, minsupp), minconf);
}

double confidence(const FormalContext& k, const AttributeSet& premise,
                  const AttributeSet& conclusion) {
    DerivationKernel kernel(k);
    std::size_t premise_count = kernel.extent(premise).count();
    if (premise_count == 0)
        throw ValidationError("confidence is undefined: the premise has support zero");
    std::size_t rule_count = kernel.extent(premise | conclusion).count();
    return static_cast<double>(rule_count) / static_cast<double>(premise_count);
}

std::vector<AssociationRule> all_association_rules_oracle(const FormalContext& k, double minsupp,
                                                          double minconf,
                                                          std::size_t max_attributes) {
    const std::size_t m = k.attributes.size();
    if (m > max_attributes || m > 20)
        throw ValidationError("all_association_rules_oracle: attribute count exceeds the cap");
    const std::size_t g = k.objects.size();

    // plain-loop support table over all attribute masks
    std::vector<std::size_t> support_table(std::size_t{1} << m, 0);
    std::vector<std::uint64_t> row_masks(g, 0);
    for (std::size_t obj = 0; obj < g; ++obj)
        for (std::size_t i = 0; i < m; ++i)
            if (k.incident(obj, i)) row_masks[obj] |= std::uint64_t{1} << i;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
        for (std::size_t obj = 0; obj < g; ++obj)
            if ((row_masks[obj] & mask) == mask) ++support_table[mask];

    auto to_bitset = [&](std::uint64_t mask) {
        Bitset b(m);
        for (std::size_t i = 0; i < m; ++i)
            if ((mask >> i) & 1) b.set(i);
        return b;
    };

    std::vector<AssociationRule> rules;
    const std::uint64_t all = (std::uint64_t{1} << m) - 1;
    for (std::uint64_t premise = 0; premise <= all; ++premise) {
        std::uint64_t rest = all & ~premise;
        // iterate the nonempty submasks of the complement
        for (std::uint64_t conclusion = rest; conclusion; conclusion = (conclusion - 1) & rest) {
            std::size_t rule_count = support_table[premise | conclusion];
            std::size_t premise_count = support_table[premise];
            if (!meets_min_support(rule_count, g, minsupp)) continue;
            if (!meets_min_confidence(rule_count, premise_count, minconf)) continue;
            AssociationRule rule;
            rule.premise = to_bitset(premise);
            rule.conclusion = to_bitset(conclusion);
            rule.rule_count = rule_count;
            rule.premise_count = premise_count;
            rule.object_count = g;
            rules.push_back(std::move(rule));
        }
    }
    return rules;
}

} // namespace kgfca

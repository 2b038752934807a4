#pragma once

#include "kgfca/fca.hpp"
#include "kgfca/formal_context.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace kgfca {

// Rule between attribute sets with exact counts; support and confidence are
// derived ratios. support = supp(premise ∪ conclusion), confidence =
// supp(premise ∪ conclusion) / supp(premise).
struct AssociationRule {
    AttributeSet premise;
    AttributeSet conclusion; // disjoint from premise
    std::size_t rule_count = 0;    // |(premise ∪ conclusion)′|
    std::size_t premise_count = 0; // |premise′|
    std::size_t object_count = 0;  // |G|

    double support() const {
        return object_count ? static_cast<double>(rule_count) / static_cast<double>(object_count) : 0.0;
    }
    double confidence() const {
        return premise_count ? static_cast<double>(rule_count) / static_cast<double>(premise_count) : 0.0;
    }

    bool operator==(const AssociationRule&) const = default;
};

struct IcebergNode {
    AttributeSet intent;
    std::size_t support_count = 0;
};

// Frequent closed attribute sets with their covering relation (edges are
// (lower, upper) node indices, transitively reduced).
struct IcebergLattice {
    std::size_t object_count = 0;
    std::vector<IcebergNode> nodes; // lectic order of intents
    std::vector<std::pair<std::size_t, std::size_t>> covers;
};

// Exactly the closed sets with support >= minsupp, found by closure descent
// with support pruning. minsupp > 1 yields an empty lattice.
IcebergLattice frequent_closed(const FormalContext& k, double minsupp);

// One rule B1 -> B2 \ B1 per cover pair with supp(B2)/supp(B1) >= minconf,
// ordered by descending support, descending confidence, lectic premise,
// lectic conclusion.
std::vector<AssociationRule> luxenburger_base(const FormalContext& k, double minsupp, double minconf);
std::vector<AssociationRule> luxenburger_base(const IcebergLattice& lattice, double minconf);

// supp(X ∪ Y) / supp(X); ValidationError when supp(X) = 0.
double confidence(const FormalContext& k, const AttributeSet& premise, const AttributeSet& conclusion);

// Test oracle: every rule X -> Y (X, Y disjoint, Y nonempty) meeting both
// thresholds, by exhaustive enumeration. ValidationError when |M| exceeds
// the cap.
std::vector<AssociationRule> all_association_rules_oracle(const FormalContext& k, double minsupp,
                                                          double minconf,
                                                          std::size_t max_attributes = 12);

} // namespace kgfca

#pragma once

#include "kgfca/bitset.hpp"
#include "kgfca/formal_context.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace kgfca {

using AttributeSet = Bitset; // width |M| of the owning context

// X -> Y over attribute indices. X -> Y and X -> Y ∪ X are the same
// implication; conclusions may or may not include the premise.
struct Implication {
    AttributeSet premise;
    AttributeSet conclusion;

    bool operator==(const Implication&) const = default;
};

struct ImplicationBase {
    std::size_t attribute_count = 0;
    std::vector<Implication> implications;
};

// Column-major view of a context; built once, queried many times. All
// operations are pure and safe to call concurrently.
class DerivationKernel {
public:
    explicit DerivationKernel(const FormalContext& k);

    std::size_t object_count() const { return object_count_; }
    std::size_t attribute_count() const { return attribute_count_; }

    // B ↦ B′ over objects.
    Bitset extent(const Bitset& attributes) const;
    std::size_t extent_size(const Bitset& attributes) const { return extent(attributes).count(); }

    // A ↦ A′ over attributes.
    Bitset intent(const Bitset& objects) const;

    // B ↦ B″.
    Bitset closure(const Bitset& attributes) const;
    Bitset closure_of_extent(const Bitset& objects) const { return intent(objects); }

    const Bitset& column(std::size_t attribute) const { return columns_[attribute]; }

private:
    std::size_t object_count_;
    std::size_t attribute_count_;
    std::vector<Bitset> columns_; // per attribute, over objects
    std::vector<Bitset> rows_;    // per object, over attributes
};

// One-shot wrappers over a freshly built kernel.
Bitset extent(const FormalContext& k, const Bitset& attributes);
Bitset intent(const FormalContext& k, const Bitset& objects);
Bitset closure(const FormalContext& k, const Bitset& attributes);

// X -> Y is valid iff X′ ⊆ Y′ (equivalently Y ⊆ X″).
bool is_valid(const FormalContext& k, const Implication& imp);

// |X′| / |G|; a ValidationError on an empty object set.
double support(const FormalContext& k, const Implication& imp);
std::size_t support_count(const FormalContext& k, const AttributeSet& premise);

struct Concept {
    Bitset extent; // over objects
    Bitset intent; // over attributes
};

// All formal concepts, intents in lectic order. The empty context yields the
// single concept (∅, ∅).
std::vector<Concept> concepts(const FormalContext& k);

using CancelFn = std::function<bool()>;

// Duquenne-Guigues base: premises are the pseudo-intents in lectic order,
// conclusions their closures. NextClosure over the growing implication
// closure. `cancelled` is polled between iterations; a true return aborts
// with Cancelled.
ImplicationBase canonical_base(const FormalContext& k, const CancelFn& cancelled = {});

// Closure of X under a fixed base, reusable across many queries.
// Counter-based; one pass of work linear in the total base size plus |M|.
class LinClosure {
public:
    LinClosure(const ImplicationBase& base);
    Bitset close(const Bitset& attributes) const;

private:
    const ImplicationBase* base_;
    std::vector<std::vector<std::uint32_t>> uses_; // attribute -> implication indices
    std::vector<std::uint32_t> premise_sizes_;
    std::vector<std::uint32_t> empty_premise_; // fire unconditionally
};

Bitset lin_closure(const ImplicationBase& base, const Bitset& attributes);

// Y ⊆ X^L.
bool entails(const ImplicationBase& base, const Implication& imp);

// Test oracle: every valid implication X -> X″ for all X ⊆ M, by direct
// enumeration over the incidence (independent of the kernel above).
// ValidationError when |M| exceeds the cap.
std::vector<Implication> theory_oracle(const FormalContext& k, std::size_t max_attributes = 12);

// Number of base elements with nonzero support.
std::size_t count_supported(const FormalContext& k, const ImplicationBase& base);

} // namespace kgfca

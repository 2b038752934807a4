#include "kgfca/fca.hpp"

#include "kgfca/error.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace kgfca {

DerivationKernel::DerivationKernel(const FormalContext& k)
    : object_count_(k.objects.size()), attribute_count_(k.attributes.size()) {
    columns_.assign(attribute_count_, Bitset(object_count_));
    rows_ = k.rows;
    for (std::size_t g = 0; g < object_count_; ++g)
        k.rows[g].for_each([&](std::size_t m) { columns_[m].set(g); });
}

Bitset DerivationKernel::extent(const Bitset& attributes) const {
    Bitset result = Bitset::full(object_count_);
    attributes.for_each([&](std::size_t m) { result &= columns_[m]; });
    return result;
}

Bitset DerivationKernel::intent(const Bitset& objects) const {
    // row path: |A| row intersections of M/64 words; column path: M subset
    // tests of G/64 words each
    std::size_t extent_size = objects.count();
    std::size_t row_words = (attribute_count_ + 63) / 64;
    std::size_t column_words = (object_count_ + 63) / 64;
    if (extent_size * row_words <= attribute_count_ * column_words) {
        Bitset result = Bitset::full(attribute_count_);
        objects.for_each([&](std::size_t g) { result &= rows_[g]; });
        return result;
    }
    Bitset result(attribute_count_);
    for (std::size_t m = 0; m < attribute_count_; ++m)
        if (objects.subset_of(columns_[m])) result.set(m);
    return result;
}

Bitset DerivationKernel::closure(const Bitset& attributes) const { return intent(extent(attributes)); }

Bitset extent(const FormalContext& k, const Bitset& attributes) {
    return DerivationKernel(k).extent(attributes);
}

Bitset intent(const FormalContext& k, const Bitset& objects) {
    return DerivationKernel(k).intent(objects);
}

Bitset closure(const FormalContext& k, const Bitset& attributes) {
    return DerivationKernel(k).closure(attributes);
}

bool is_valid(const FormalContext& k, const Implication& imp) {
    DerivationKernel kernel(k);
    Bitset premise_extent = kernel.extent(imp.premise);
    Bitset conclusion_extent = kernel.extent(imp.conclusion);
    return premise_extent.subset_of(conclusion_extent);
}

std::size_t support_count(const FormalContext& k, const AttributeSet& premise) {
    return DerivationKernel(k).extent_size(premise);
}

double support(const FormalContext& k, const Implication& imp) {
    if (k.objects.empty()) throw ValidationError("support is undefined on an empty context");
    return static_cast<double>(support_count(k, imp.premise)) /
           static_cast<double>(k.objects.size());
}

namespace {

// Lectic successor scaffold shared by concepts() and canonical_base(): given
// the current set A and a closure operator, find the lectically next closed
// set. Returns false when A is the last one (A = M).
template <typename CloseFn>
bool next_closure(Bitset& a, std::size_t attribute_count, CloseFn&& close) {
    for (std::size_t i = attribute_count; i-- > 0;) {
        if (a.test(i)) continue;
        // candidate: keep everything below i, add i
        Bitset candidate = a.prefix(i);
        candidate.set(i);
        Bitset closed = close(candidate);
        // canonical iff the closure adds nothing new below i
        if (closed.prefix_subset_of(a, i)) {
            a = std::move(closed);
            return true;
        }
    }
    return false;
}

} // namespace

std::vector<Concept> concepts(const FormalContext& k) {
    DerivationKernel kernel(k);
    std::vector<Concept> out;
    Bitset intent = kernel.closure(Bitset(kernel.attribute_count()));
    while (true) {
        out.push_back(Concept{kernel.extent(intent), intent});
        if (!next_closure(intent, kernel.attribute_count(),
                          [&](const Bitset& b) { return kernel.closure(b); }))
            break;
    }
    return out;
}

ImplicationBase canonical_base(const FormalContext& k, const CancelFn& cancelled) {
    DerivationKernel kernel(k);
    const std::size_t m = kernel.attribute_count();
    ImplicationBase base{m, {}};

    std::optional<LinClosure> closer;
    std::size_t closer_size = SIZE_MAX;

    Bitset a(m); // ∅ is the lectically first set closed under the (empty) base
    while (true) {
        if (cancelled && cancelled()) throw Cancelled();
        Bitset closed = kernel.closure(a);
        if (closed != a) base.implications.push_back(Implication{a, closed});
        if (a.count() == m) break;
        // candidates must be closed under the base collected so far
        if (closer_size != base.implications.size()) {
            closer.emplace(base);
            closer_size = base.implications.size();
        }
        if (!next_closure(a, m, [&](const Bitset& b) { return closer->close(b); })) break;
    }
    return base;
}

LinClosure::LinClosure(const ImplicationBase& base) : base_(&base) {
    uses_.assign(base.attribute_count, {});
    premise_sizes_.resize(base.implications.size());
    for (std::size_t i = 0; i < base.implications.size(); ++i) {
        const Bitset& premise = base.implications[i].premise;
        std::size_t size = premise.count();
        premise_sizes_[i] = static_cast<std::uint32_t>(size);
        if (size == 0)
            empty_premise_.push_back(static_cast<std::uint32_t>(i));
        else
            premise.for_each(
                [&](std::size_t m) { uses_[m].push_back(static_cast<std::uint32_t>(i)); });
    }
}

Bitset LinClosure::close(const Bitset& attributes) const {
    Bitset result = attributes;
    std::vector<std::uint32_t> remaining = premise_sizes_;
    std::vector<std::uint32_t> queue;

    auto fire = [&](std::size_t implication_index) {
        const Implication& imp = base_->implications[implication_index];
        imp.conclusion.for_each([&](std::size_t m) {
            if (!result.test(m)) {
                result.set(m);
                queue.push_back(static_cast<std::uint32_t>(m));
            }
        });
    };

    for (std::uint32_t i : empty_premise_) fire(i);
    attributes.for_each([&](std::size_t m) { queue.push_back(static_cast<std::uint32_t>(m)); });

    while (!queue.empty()) {
        std::uint32_t m = queue.back();
        queue.pop_back();
        for (std::uint32_t i : uses_[m])
            if (--remaining[i] == 0) fire(i);
    }
    return result;
}

Bitset lin_closure(const ImplicationBase& base, const Bitset& attributes) {
    return LinClosure(base).close(attributes);
}

bool entails(const ImplicationBase& base, const Implication& imp) {
    return imp.conclusion.subset_of(lin_closure(base, imp.premise));
}

std::vector<Implication> theory_oracle(const FormalContext& k, std::size_t max_attributes) {
    const std::size_t m = k.attributes.size();
    if (m > max_attributes || m > 24)
        throw ValidationError("theory_oracle: attribute count exceeds the cap");

    // independent derivation: plain loops over the incidence, no kernel
    auto naive_closure = [&](std::uint64_t mask) -> std::uint64_t {
        std::vector<std::size_t> objs;
        for (std::size_t g = 0; g < k.objects.size(); ++g) {
            bool has_all = true;
            for (std::size_t i = 0; i < m && has_all; ++i)
                if ((mask >> i) & 1) has_all = k.incident(g, i);
            if (has_all) objs.push_back(g);
        }
        std::uint64_t closed = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t g : objs) {
                if (!k.incident(g, i)) {
                    closed &= ~(std::uint64_t{1} << i);
                    break;
                }
            }
        }
        return closed;
    };

    auto to_bitset = [&](std::uint64_t mask) {
        Bitset b(m);
        for (std::size_t i = 0; i < m; ++i)
            if ((mask >> i) & 1) b.set(i);
        return b;
    };

    std::vector<Implication> theory;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
        theory.push_back(Implication{to_bitset(mask), to_bitset(naive_closure(mask))});
    return theory;
}

std::size_t count_supported(const FormalContext& k, const ImplicationBase& base) {
    DerivationKernel kernel(k);
    std::size_t n = 0;
    for (const Implication& imp : base.implications)
        if (!kernel.extent(imp.premise).empty()) ++n;
    return n;
}

} // namespace kgfca

#include "kgfca/pac.hpp"

#include "kgfca/error.hpp"

#include <cmath>
#include <random>

namespace kgfca {

namespace {

void validate_params(const PacParams& params) {
    if (!(params.epsilon > 0.0) || params.epsilon > 1.0)
        throw ValidationError("pac: epsilon must be in (0, 1]");
    if (!(params.delta > 0.0) || params.delta > 1.0)
        throw ValidationError("pac: delta must be in (0, 1]");
}

// Uniform subset of M attributes: |M| fair bits, least-significant attribute
// first, 64 attributes per generator word.
Bitset draw_subset(std::mt19937_64& rng, std::size_t attribute_count) {
    Bitset subset(attribute_count);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < attribute_count; ++i) {
        if ((i & 63) == 0) word = rng();
        if ((word >> (i & 63)) & 1) subset.set(i);
    }
    return subset;
}

} // namespace

ImplicationBase pac_basis(const FormalContext& k, const PacParams& params, PacRunInfo* info) {
    validate_params(params);
    DerivationKernel kernel(k);
    const std::size_t m = kernel.attribute_count();

    ImplicationBase base{m, {}};
    std::mt19937_64 rng(params.seed);
    PacRunInfo run;

    const double log_inv_delta = std::log(1.0 / params.delta);

    while (true) {
        ++run.equivalence_checks;
        std::size_t samples = static_cast<std::size_t>(std::ceil(
            (static_cast<double>(run.equivalence_checks) + log_inv_delta) / params.epsilon));

        // The batch is drawn up front and scanned in draw order, so the
        // consumed random sequence depends only on the seed.
        LinClosure closer(base);
        bool found = false;
        Bitset counterexample(m);
        for (std::size_t s = 0; s < samples; ++s) {
            Bitset x = draw_subset(rng, m);
            ++run.samples_drawn;
            if (!found) {
                Bitset by_base = closer.close(x);
                if (by_base != kernel.closure(x)) {
                    found = true;
                    counterexample = std::move(by_base);
                }
            }
        }
        if (!found) break;

        ++run.counterexamples;
        // counterexample is closed under the base but not in the context;
        // standard Horn refinement: shrink the first premise that meets it
        // in a non-closed proper subset, otherwise append.
        bool refined = false;
        for (Implication& imp : base.implications) {
            Bitset meet = imp.premise & counterexample;
            if (meet == imp.premise) continue; // not a proper subset
            Bitset closed = kernel.closure(meet);
            if (closed == meet) continue; // already a model
            imp = Implication{std::move(meet), std::move(closed)};
            refined = true;
            break;
        }
        if (!refined)
            base.implications.push_back(
                Implication{counterexample, kernel.closure(counterexample)});
    }

    if (info) *info = run;
    return base;
}

double horn_distance(const ImplicationBase& base, const FormalContext& k,
                     std::size_t max_attributes) {
    const std::size_t m = k.attributes.size();
    if (m > max_attributes || m > 30)
        throw ValidationError("horn_distance: attribute count exceeds the exact-mode cap");

    DerivationKernel kernel(k);
    LinClosure closer(base);
    std::size_t disagreements = 0;
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Bitset x(m);
        for (std::size_t i = 0; i < m; ++i)
            if ((mask >> i) & 1) x.set(i);
        if (closer.close(x) != kernel.closure(x)) ++disagreements;
    }
    return static_cast<double>(disagreements) / static_cast<double>(total);
}

HornDistanceEstimate horn_distance_estimate(const ImplicationBase& base, const FormalContext& k,
                                            std::size_t samples, std::uint64_t seed) {
    if (samples == 0) throw ValidationError("horn_distance_estimate: need at least one sample");
    DerivationKernel kernel(k);
    LinClosure closer(base);
    std::mt19937_64 rng(seed);
    const std::size_t m = k.attributes.size();

    std::size_t disagreements = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        Bitset x = draw_subset(rng, m);
        if (closer.close(x) != kernel.closure(x)) ++disagreements;
    }
    HornDistanceEstimate est;
    est.samples = samples;
    est.estimate = static_cast<double>(disagreements) / static_cast<double>(samples);
    est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(samples));
    return est;
}

} // namespace kgfca

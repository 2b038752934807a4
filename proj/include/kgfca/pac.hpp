#pragma once

#include "kgfca/fca.hpp"
#include "kgfca/formal_context.hpp"

#include <cstddef>
#include <cstdint>

namespace kgfca {

struct PacParams {
    double epsilon = 0.1; // accuracy, in (0, 1]
    double delta = 0.1;   // failure probability, in (0, 1]
    std::uint64_t seed = 0;
};

struct PacRunInfo {
    std::size_t equivalence_checks = 0;
    std::size_t counterexamples = 0;
    std::size_t samples_drawn = 0;
};

// Horn query learning against the context as an exact closure oracle. The
// i-th approximate equivalence check draws ceil((1/epsilon) * (i + ln(1/delta)))
// uniform attribute subsets (|M| fair bits each, least-significant attribute
// first) and scans them in draw order for a counterexample. Every emitted
// implication is valid in k; with probability >= 1 - delta the result's horn
// distance to k is <= epsilon. Deterministic for a fixed seed.
ImplicationBase pac_basis(const FormalContext& k, const PacParams& params,
                          PacRunInfo* info = nullptr);

// Fraction of X ⊆ M with lin_closure(base, X) != X″, by exhaustive
// enumeration; ValidationError above the attribute cap.
double horn_distance(const ImplicationBase& base, const FormalContext& k,
                     std::size_t max_attributes = 20);

struct HornDistanceEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
};

// Monte-Carlo variant for contexts beyond the exact cap.
HornDistanceEstimate horn_distance_estimate(const ImplicationBase& base, const FormalContext& k,
                                            std::size_t samples, std::uint64_t seed);

} // namespace kgfca

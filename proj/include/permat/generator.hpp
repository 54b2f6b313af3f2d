#pragma once

#include "permat/canonical.hpp"

namespace permat {

struct GenOptions {
    /// Require 2*rank >= n when set (resamples deterministically).
    bool rank_at_least_half = false;
    /// Explicit minimum rank; overrides nothing else.
    std::optional<int> rank_min;
    int max_nil_block = 6;
    int max_cyclo_index = 30;
};

/// A seeded periodic test instance: elementary divisor multiset, its block
/// matrix, and a unimodular conjugate A = S B S^{-1}.
struct GeneratedInstance {
    Matrix A;
    Matrix block;
    Matrix conjugator;
    Matrix conjugator_inv;
    std::vector<ElementaryDivisor> truth;
};

GeneratedInstance generate_instance(const FieldDescriptor& field, int size, std::uint64_t seed,
                                    const GenOptions& options = {});

}  // namespace permat

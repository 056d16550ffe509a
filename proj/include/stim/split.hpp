#pragma once

#include <cstdint>
#include <vector>

#include "stim/manifest.hpp"

namespace stim {

struct SplitSpec {
    enum class Protocol { fixed_counts, fraction };

    Protocol protocol = Protocol::fraction;
    int train_per_category = 1;  // fixed_counts
    int test_per_category = 1;   // fixed_counts
    double train_fraction = 0.5; // fraction, in (0, 1)
    std::uint64_t seed = 0;
    int repeats = 1;
};

struct Split {
    std::vector<int> train;  // entry indices
    std::vector<int> test;
};

// Category-stratified random split, deterministic in (seed, run_index).
// fixed_counts draws train_per_category then test_per_category entries per
// category without replacement; fraction takes round-half-up
// (fraction * size) training entries, clamped to [1, size-1], and tests on
// the rest. Throws ProtocolError naming the first undersized category.
Split make_split(const DatasetManifest& manifest, const SplitSpec& spec, int run_index);

}  // namespace stim

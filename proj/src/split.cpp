#include "stim/split.hpp"

#include <algorithm>
#include <cmath>

#include "stim/errors.hpp"
#include "stim/rng.hpp"

namespace stim {

Split make_split(const DatasetManifest& manifest, const SplitSpec& spec, int run_index) {
    if (spec.protocol == SplitSpec::Protocol::fraction &&
        !(spec.train_fraction > 0.0 && spec.train_fraction < 1.0))
        throw ContractError("make_split: train_fraction must lie in (0, 1)");
    if (spec.protocol == SplitSpec::Protocol::fixed_counts &&
        (spec.train_per_category < 1 || spec.test_per_category < 1))
        throw ContractError("make_split: per-category counts must be >= 1");

    Rng rng(mix_seed(spec.seed, static_cast<std::uint64_t>(run_index)));
    Split split;

    for (const auto& [label, indices] : manifest.by_category()) {
        const int size = static_cast<int>(indices.size());
        int n_train = 0;
        int n_test = 0;
        if (spec.protocol == SplitSpec::Protocol::fixed_counts) {
            n_train = spec.train_per_category;
            n_test = spec.test_per_category;
            if (size < n_train + n_test)
                throw ProtocolError("category '" + label + "' has " + std::to_string(size) +
                                    " entries; protocol needs " +
                                    std::to_string(n_train + n_test));
        } else {
            if (size < 2)
                throw ProtocolError("category '" + label +
                                     "' needs at least 2 entries for a fraction split");
            n_train = static_cast<int>(std::floor(spec.train_fraction * size + 0.5));
            n_train = std::clamp(n_train, 1, size - 1);
            n_test = size - n_train;
        }

        // Partial Fisher-Yates: position i receives the i-th draw without
        // replacement from the category stream.
        std::vector<int> pool = indices;
        const int need =
            spec.protocol == SplitSpec::Protocol::fixed_counts ? n_train + n_test : size;
        for (int i = 0; i < need && i < size - 1; ++i) {
            const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(size - i)));
            std::swap(pool[i], pool[j]);
        }
        split.train.insert(split.train.end(), pool.begin(), pool.begin() + n_train);
        split.test.insert(split.test.end(), pool.begin() + n_train,
                          pool.begin() + n_train + n_test);
    }
    return split;
}

}  // namespace stim

#pragma once

#include <cstdint>
#include <vector>

#include "stim/descriptor_set.hpp"

namespace stim {

struct Codebook {
    int k = 0;
    int dimension = 0;
    Eigen::MatrixXd centers;  // k x dimension
    std::uint64_t seed = 0;
    double inertia = 0.0;  // within-cluster sum of squares at convergence
};

// Lloyd's algorithm with k-means++ seeding. Runs until the relative inertia
// improvement drops below tol or max_iter is hit; empty clusters are
// re-seeded to the point farthest from its assigned center. Deterministic
// for fixed (features, k, seed). `inertia_trace`, when given, receives the
// inertia measured at every assignment step (non-increasing).
Codebook kmeans_train(const FeatureMatrix& features, int k, std::uint64_t seed,
                      int max_iter = 100, double tol = 1e-4,
                      std::vector<double>* inertia_trace = nullptr);

}  // namespace stim

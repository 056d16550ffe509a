#pragma once

#include <cstdint>
#include <vector>

#include "stim/descriptor_set.hpp"

namespace stim {

// Diagonal-covariance Gaussian mixture.
struct GaussianMixture {
    int k = 0;
    int dimension = 0;
    Eigen::VectorXd weights;    // simplex, all > 0
    Eigen::MatrixXd means;      // k x dimension
    Eigen::MatrixXd variances;  // k x dimension, >= the variance floor
};

// EM initialized from kmeans_train(features, k, seed). Stops when the
// relative log-likelihood improvement drops below tol. Variances are floored
// at var_floor_scale times the mean per-dimension data variance.
// Deterministic for fixed inputs. `ll_trace`, when given, receives the total
// log-likelihood per EM iteration (non-decreasing).
GaussianMixture gmm_train(const FeatureMatrix& features, int k, std::uint64_t seed,
                          int max_iter = 100, double tol = 1e-5,
                          double var_floor_scale = 1e-6,
                          std::vector<double>* ll_trace = nullptr);

// Total log-likelihood of the rows of `features` under the mixture.
double gmm_log_likelihood(const GaussianMixture& gmm, const FeatureMatrix& features);

// Per-component posteriors for a single feature vector (sums to 1).
Eigen::VectorXd gmm_responsibilities(const GaussianMixture& gmm, const Eigen::VectorXd& x);

}  // namespace stim

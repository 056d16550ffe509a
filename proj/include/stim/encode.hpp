#pragma once

#include <string>

#include "stim/descriptor_set.hpp"
#include "stim/gmm.hpp"
#include "stim/kmeans.hpp"

namespace stim {

// Fixed-length image representation produced by one of the encoders.
struct EncodedVector {
    int dimension = 0;
    Eigen::VectorXd values;
    std::string encoder_id;      // bow | ifv | rcc | lbp-hist
    std::string normalization;   // human-readable description
};

// Hard-assignment word counts (nearest center, ties to the lowest index).
Eigen::VectorXd bow_raw_counts(const DescriptorSet& features, const Codebook& codebook);

// L1-normalized counts mapped through an elementwise square root (Hellinger).
// An empty descriptor set encodes to the zero vector.
EncodedVector bow_encode(const DescriptorSet& features, const Codebook& codebook);

// Improved-Fisher-vector statistics before any normalization: per component
// the responsibility-weighted first-order (standardized residual) and
// second-order (squared standardized residual minus one) sums, each scaled
// by 1 / (N * sqrt(weight_k)); mean gradients first, variance gradients
// second, 2*K*D entries total.
Eigen::VectorXd ifv_statistics(const DescriptorSet& features, const GaussianMixture& gmm);

// Signed square root followed by L2 normalization of the statistics.
EncodedVector ifv_encode(const DescriptorSet& features, const GaussianMixture& gmm);

struct RccCounts {
    Eigen::VectorXd unary;  // K word counts
    Eigen::VectorXd pairs;  // K(K+1)/2 unordered-pair counts
};

// Raw counts behind rcc_encode: a word histogram plus counts of unordered
// word pairs for features that share a cell of the cell_size grid and lie
// within `radius` of each other. Pair bin for words (i <= j):
//   i*K - i*(i-1)/2 + (j - i).
RccCounts rcc_raw_counts(const DescriptorSet& features, const Codebook& codebook, int cell_size,
                         int radius);

// Both blocks L1-normalized and Hellinger-mapped, unary block first.
EncodedVector rcc_encode(const DescriptorSet& features, const Codebook& codebook,
                         int cell_size = 32, int radius = 16);

}  // namespace stim

#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace stim {

// Local feature rows are stored as 32-bit floats; that is also the on-disk
// cache precision, so cache round trips are bitwise.
using FeatureMatrix = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// N local feature vectors with the keypoint center and scale they came from.
struct DescriptorSet {
    int dimension = 0;
    FeatureMatrix vectors;                   // N x dimension
    std::vector<Eigen::Vector2i> positions;  // keypoint centers, pixel coordinates
    std::vector<std::int32_t> scale_index;

    Eigen::Index size() const { return vectors.rows(); }
};

}  // namespace stim

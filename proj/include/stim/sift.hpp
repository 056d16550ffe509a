#pragma once

#include "stim/descriptor_set.hpp"
#include "stim/image.hpp"

namespace stim {

// Upright SIFT at a single keypoint. Conventions, also relied on by tests:
//  - gradients are clamped central differences,
//      gx = 0.5 * (I(x+1, y) - I(x-1, y)) with coordinates clamped to bounds;
//  - the patch of side s covers pixels [x - s/2, x - s/2 + s), clipped;
//  - pixel offsets are taken from the patch center, dx = px - x + 0.5;
//  - spatial pooling: 4x4 cells x 8 orientation bins, trilinear soft
//    assignment, Gaussian weight sigma = s/2;
//  - orientation comes from atan2 of the *normalized* gradient, which keeps
//    the descriptor bitwise invariant under exact power-of-two gain changes;
//  - L2 normalize, clip entries at 0.2, L2 normalize again; a gradient-free
//    patch yields the all-zero vector.
// Bin layout: index = (cell_y * 4 + cell_x) * 8 + orientation.
Eigen::VectorXf sift_at(const GrayImage& gray, int x, int y, int patch_size);

// Patch side lengths used for `scale_count` dense scales: 16 + 8k.
std::vector<int> sift_patch_sizes(int scale_count);

// Multi-scale dense SIFT over the foreground grid (coverage threshold 0.5).
// Rows are ordered by y, then x, then scale.
DescriptorSet dense_sift(const GrayImage& gray, const ForegroundMask& mask, int step = 4,
                         int scale_count = 5);

inline constexpr int kSiftDimension = 128;

}  // namespace stim

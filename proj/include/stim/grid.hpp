#pragma once

#include <vector>

#include "stim/image.hpp"

namespace stim {

// Dense keypoint lattice restricted to sufficiently-foreground patches.
// Keypoints are ordered by y, then x, then scale index; every descriptor
// built on top of a grid inherits that order.
struct SamplingGrid {
    struct Keypoint {
        int x = 0;
        int y = 0;
        int scale = 0;  // index into `scales`
    };

    int step = 1;
    std::vector<int> scales;  // patch side lengths, strictly increasing
    std::vector<Keypoint> keypoints;
};

// A patch of side s centered at (x, y) covers columns [x - s/2, x - s/2 + s)
// clipped to the image; coverage is the foreground fraction of the clipped
// area. A keypoint survives at a scale iff coverage >= coverage_threshold.
SamplingGrid build_grid(const ForegroundMask& mask, int step, std::vector<int> scales,
                        double coverage_threshold);

}  // namespace stim

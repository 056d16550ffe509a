#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "stim/image.hpp"

namespace stim {

enum class LbpMapping { u2, ri, riu2 };

// One of the supported circular neighborhoods: (8,1) or (16,2).
struct LbpSpec {
    int neighbors = 8;
    int radius = 1;
    LbpMapping mapping = LbpMapping::u2;
};

// code -> bin lookup for one (P, mapping) pair. Bins are contiguous from 0;
// tables are cheap to rebuild and never stored.
struct MappingTable {
    int neighbors = 0;
    LbpMapping mapping = LbpMapping::u2;
    int bins = 0;
    std::vector<std::int32_t> code_to_bin;  // 2^P entries
};

// Sampling conventions shared by lbp_code and the test oracles:
//  - neighbor k sits at angle 2*pi*k/P on the radius-R circle, x to the
//    right, y down: offset = (R cos, R sin);
//  - offsets are snapped to the nearest 1/256 so that bilinear interpolation
//    of 8-bit-quantized gray values is exact dyadic arithmetic;
//  - bit k = 1 iff sample >= center - 1e-12 (the tolerance absorbs
//    interpolation roundoff on full-precision inputs; ties count as 1);
//  - bit k = 0 is the least significant bit of the code.
std::vector<std::pair<double, double>> lbp_neighbor_offsets(int neighbors, double radius);

// Centers must keep the whole neighborhood inside the image: at least
// ceil(R) + 1 pixels from every border.
int lbp_valid_margin(double radius);

int lbp_code(const GrayImage& gray, int x, int y, int neighbors, double radius);

MappingTable build_mapping(int neighbors, LbpMapping mapping);

// Mapped-code histogram over foreground pixels with full neighborhoods,
// L1-normalized; all-zero when no pixel qualifies.
Eigen::VectorXd lbp_histogram(const GrayImage& gray, const ForegroundMask& mask,
                              const LbpSpec& spec);

// Concatenation of the u2(8,1) and u2(16,2) histograms (59 + 243 bins).
Eigen::VectorXd mslbp(const GrayImage& gray, const ForegroundMask& mask);

// Gradient-steered co-occurrence LBP. For each valid foreground pixel p:
// theta is the central-difference gradient direction (0 when the gradient
// magnitude is below 1e-6); for each offset d the partner q = p + d*(cos
// theta, sin theta), rounded to the nearest pixel, is paired when its own
// neighborhood fits the image. The joint bin is
//   u2(8,1) bin of the code at q  x  riu2(8,1) bin of the code at p,
// laid out as u2_bin * 10 + riu2_bin, 590 bins per offset, each offset block
// L1-normalized, blocks concatenated in offset order.
Eigen::VectorXd prico_lbp(const GrayImage& gray, const ForegroundMask& mask,
                          const std::vector<int>& offsets = {2, 4});

}  // namespace stim

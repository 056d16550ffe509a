#pragma once

#include <array>
#include <string>

#include "stim/descriptor_set.hpp"
#include "stim/image.hpp"

namespace stim {

inline constexpr int kColorNameCount = 11;

// Fixed term order for every table row and serialized file.
inline constexpr std::array<const char*, kColorNameCount> kColorNameOrder = {
    "black", "blue", "brown", "grey", "green", "orange",
    "pink",  "purple", "red", "white", "yellow"};

// Probability of each color name per quantized RGB cell. Rows are indexed
// (r_bin * bins + g_bin) * bins + b_bin with bin = floor(v * bins / 256).
struct ColorNameTable {
    int bins_per_channel = 32;
    Eigen::MatrixXd table;  // bins^3 x 11, rows on the probability simplex
};

// Analytic stand-in for a learned color-name model: one RGB prototype per
// name, row probabilities proportional to exp(-d^2 / (2 tau^2)) over
// Euclidean RGB distances from the cell center to the prototypes, tau = 60.
// Swappable for a learned table file without code changes.
ColorNameTable make_fallback_color_table(int bins_per_channel = 32);

// Prototype used by the fallback construction, exposed for verification.
Eigen::Vector3d color_name_prototype(int name_index);

void validate_color_table(const ColorNameTable& table);

Eigen::Matrix<double, kColorNameCount, 1> rgb_to_cn(std::uint8_t r, std::uint8_t g,
                                                    std::uint8_t b,
                                                    const ColorNameTable& table);

enum class ColorMode { cn, rgb };

// Dense patch-pooled color features over the foreground grid (scales 8 and
// 16 px, coverage threshold 0.5). Each keypoint emits the patch-mean RGB,
// either scaled to [0,1] (rgb mode, dimension 3) or mapped through the
// color-name table after rounding to 8-bit (cn mode, dimension 11). Rows are
// ordered by y, then x, then scale.
DescriptorSet dense_color(const RasterImage& image, const ForegroundMask& mask, ColorMode mode,
                          const ColorNameTable* table, int step = 5, int scale_count = 2);

}  // namespace stim

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace stim {

using GrayArray = Eigen::Array<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MaskArray = Eigen::Array<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// 8-bit interleaved RGB, row-major.
struct RasterImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // width * height * 3

    std::uint8_t* pixel(int x, int y) {
        return data.data() + 3 * (static_cast<std::size_t>(y) * width + x);
    }
    const std::uint8_t* pixel(int x, int y) const {
        return data.data() + 3 * (static_cast<std::size_t>(y) * width + x);
    }
};

RasterImage make_image(int width, int height, std::uint8_t r = 0, std::uint8_t g = 0,
                       std::uint8_t b = 0);

// Luminance in [0, 1], indexed (row, col) = (y, x).
struct GrayImage {
    GrayArray values;

    int width() const { return static_cast<int>(values.cols()); }
    int height() const { return static_cast<int>(values.rows()); }
    double at(int x, int y) const { return values(y, x); }
};

// Binary foreground annotation, 1 = foreground. Dimensions always match the
// paired image.
struct ForegroundMask {
    MaskArray values;

    int width() const { return static_cast<int>(values.cols()); }
    int height() const { return static_cast<int>(values.rows()); }
    bool foreground(int x, int y) const { return values(y, x) != 0; }
    Eigen::Index foreground_count() const {
        return (values != std::uint8_t{0}).count();
    }
};

ForegroundMask make_mask(int width, int height, std::uint8_t fill = 1);

// Rec.601 luma: (0.299 R + 0.587 G + 0.114 B) / 255.
GrayImage to_grayscale(const RasterImage& image);

// Scales image and mask to target_height, preserving aspect ratio (width
// rounded to nearest pixel, at least 1). Pixels resample bilinearly, the mask
// by nearest neighbor with re-binarization at 0.5.
std::pair<RasterImage, ForegroundMask> resize_to_height(const RasterImage& image,
                                                        const ForegroundMask& mask,
                                                        int target_height);

// Tight bounding box of the foreground, applied to image and mask alike.
std::pair<RasterImage, ForegroundMask> crop_to_mask(const RasterImage& image,
                                                    const ForegroundMask& mask);

}  // namespace stim

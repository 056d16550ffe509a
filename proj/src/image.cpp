#include "stim/image.hpp"

#include <algorithm>
#include <cmath>

#include "stim/errors.hpp"

namespace stim {
namespace {

void check_image(const RasterImage& image) {
    if (image.width <= 0 || image.height <= 0)
        throw ContractError("image dimensions must be positive");
    if (image.data.size() != static_cast<std::size_t>(image.width) * image.height * 3)
        throw ContractError("image data length does not match width*height*3");
}

void check_pair(const RasterImage& image, const ForegroundMask& mask) {
    check_image(image);
    if (mask.width() != image.width || mask.height() != image.height)
        throw ContractError("mask dimensions do not match image");
}

// Center-aligned source coordinate for an output pixel.
inline double src_coord(int out, double scale) {
    return (static_cast<double>(out) + 0.5) * scale - 0.5;
}

}  // namespace

RasterImage make_image(int width, int height, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    if (width <= 0 || height <= 0) throw ContractError("image dimensions must be positive");
    RasterImage image;
    image.width = width;
    image.height = height;
    image.data.resize(static_cast<std::size_t>(width) * height * 3);
    for (std::size_t i = 0; i < image.data.size(); i += 3) {
        image.data[i] = r;
        image.data[i + 1] = g;
        image.data[i + 2] = b;
    }
    return image;
}

ForegroundMask make_mask(int width, int height, std::uint8_t fill) {
    if (width <= 0 || height <= 0) throw ContractError("mask dimensions must be positive");
    ForegroundMask mask;
    mask.values = MaskArray::Constant(height, width, fill ? 1 : 0);
    return mask;
}

GrayImage to_grayscale(const RasterImage& image) {
    check_image(image);
    GrayImage gray;
    gray.values.resize(image.height, image.width);
    for (int y = 0; y < image.height; ++y) {
        for (int x = 0; x < image.width; ++x) {
            const std::uint8_t* p = image.pixel(x, y);
            gray.values(y, x) = (0.299 * p[0] + 0.587 * p[1] + 0.114 * p[2]) / 255.0;
        }
    }
    return gray;
}

std::pair<RasterImage, ForegroundMask> resize_to_height(const RasterImage& image,
                                                        const ForegroundMask& mask,
                                                        int target_height) {
    check_pair(image, mask);
    if (target_height < 1) throw ContractError("target_height must be >= 1");

    const double ratio = static_cast<double>(image.width) / image.height;
    const int target_width =
        std::max(1, static_cast<int>(std::lround(ratio * target_height)));

    RasterImage out;
    out.width = target_width;
    out.height = target_height;
    out.data.resize(static_cast<std::size_t>(target_width) * target_height * 3);

    const double sx = static_cast<double>(image.width) / target_width;
    const double sy = static_cast<double>(image.height) / target_height;

    for (int y = 0; y < target_height; ++y) {
        const double fy = std::clamp(src_coord(y, sy), 0.0, image.height - 1.0);
        const int y0 = static_cast<int>(std::floor(fy));
        const int y1 = std::min(y0 + 1, image.height - 1);
        const double wy = fy - y0;
        for (int x = 0; x < target_width; ++x) {
            const double fx = std::clamp(src_coord(x, sx), 0.0, image.width - 1.0);
            const int x0 = static_cast<int>(std::floor(fx));
            const int x1 = std::min(x0 + 1, image.width - 1);
            const double wx = fx - x0;
            for (int c = 0; c < 3; ++c) {
                const double top = (1.0 - wx) * image.pixel(x0, y0)[c] + wx * image.pixel(x1, y0)[c];
                const double bot = (1.0 - wx) * image.pixel(x0, y1)[c] + wx * image.pixel(x1, y1)[c];
                const double v = (1.0 - wy) * top + wy * bot;
                out.pixel(x, y)[c] = static_cast<std::uint8_t>(
                    std::clamp<long>(std::lround(v), 0, 255));
            }
        }
    }

    ForegroundMask mout;
    mout.values.resize(target_height, target_width);
    for (int y = 0; y < target_height; ++y) {
        const double fy = std::clamp(src_coord(y, sy), 0.0, image.height - 1.0);
        const int ny = std::clamp(static_cast<int>(std::floor(fy + 0.5)), 0, image.height - 1);
        for (int x = 0; x < target_width; ++x) {
            const double fx = std::clamp(src_coord(x, sx), 0.0, image.width - 1.0);
            const int nx = std::clamp(static_cast<int>(std::floor(fx + 0.5)), 0, image.width - 1);
            // Nearest neighbor keeps the mask binary; >= 0.5 re-binarization.
            mout.values(y, x) = mask.values(ny, nx) >= 1 ? 1 : 0;
        }
    }
    return {std::move(out), std::move(mout)};
}

std::pair<RasterImage, ForegroundMask> crop_to_mask(const RasterImage& image,
                                                    const ForegroundMask& mask) {
    check_pair(image, mask);
    int min_x = image.width, max_x = -1, min_y = image.height, max_y = -1;
    for (int y = 0; y < image.height; ++y) {
        for (int x = 0; x < image.width; ++x) {
            if (mask.values(y, x)) {
                min_x = std::min(min_x, x);
                max_x = std::max(max_x, x);
                min_y = std::min(min_y, y);
                max_y = std::max(max_y, y);
            }
        }
    }
    if (max_x < 0) throw ContractError("crop_to_mask requires at least one foreground pixel");

    const int w = max_x - min_x + 1;
    const int h = max_y - min_y + 1;
    RasterImage out;
    out.width = w;
    out.height = h;
    out.data.resize(static_cast<std::size_t>(w) * h * 3);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < 3; ++c)
                out.pixel(x, y)[c] = image.pixel(min_x + x, min_y + y)[c];

    ForegroundMask mout;
    mout.values = mask.values.block(min_y, min_x, h, w);
    return {std::move(out), std::move(mout)};
}

}  // namespace stim

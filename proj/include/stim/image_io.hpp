#pragma once

#include <string>

#include "stim/image.hpp"

namespace stim {

// Decodes a PNG or JPEG file (sniffed by magic bytes) into 8-bit RGB.
// Grayscale and paletted inputs are expanded; alpha is dropped.
RasterImage load_image(const std::string& path);

// Reads a mask PNG: any nonzero sample is foreground.
ForegroundMask load_mask(const std::string& path);

void save_png(const std::string& path, const RasterImage& image);
void save_mask_png(const std::string& path, const ForegroundMask& mask);
void save_jpeg(const std::string& path, const RasterImage& image, int quality = 90);

}  // namespace stim

#include "stim/color_names.hpp"

#include <cmath>

#include "stim/errors.hpp"
#include "stim/grid.hpp"

namespace stim {
namespace {

// Prototypes in kColorNameOrder.
constexpr double kPrototypes[kColorNameCount][3] = {
    {0, 0, 0},        // black
    {0, 0, 255},      // blue
    {139, 69, 19},    // brown
    {128, 128, 128},  // grey
    {0, 128, 0},      // green
    {255, 165, 0},    // orange
    {255, 192, 203},  // pink
    {128, 0, 128},    // purple
    {255, 0, 0},      // red
    {255, 255, 255},  // white
    {255, 255, 0},    // yellow
};

constexpr double kTau = 60.0;

inline int channel_bin(double value, int bins) {
    int b = static_cast<int>(std::floor(value * bins / 256.0));
    if (b < 0) b = 0;
    if (b >= bins) b = bins - 1;
    return b;
}

}  // namespace

Eigen::Vector3d color_name_prototype(int name_index) {
    if (name_index < 0 || name_index >= kColorNameCount)
        throw ContractError("color_name_prototype: index out of range");
    return {kPrototypes[name_index][0], kPrototypes[name_index][1],
            kPrototypes[name_index][2]};
}

ColorNameTable make_fallback_color_table(int bins_per_channel) {
    if (bins_per_channel < 1 || bins_per_channel > 256)
        throw ContractError("bins_per_channel must be in [1, 256]");

    ColorNameTable out;
    out.bins_per_channel = bins_per_channel;
    const int bins = bins_per_channel;
    const double cell = 256.0 / bins;
    out.table.resize(static_cast<Eigen::Index>(bins) * bins * bins, kColorNameCount);

    Eigen::Index row = 0;
    for (int rb = 0; rb < bins; ++rb) {
        for (int gb = 0; gb < bins; ++gb) {
            for (int bb = 0; bb < bins; ++bb, ++row) {
                const double r = (rb + 0.5) * cell - 0.5;
                const double g = (gb + 0.5) * cell - 0.5;
                const double b = (bb + 0.5) * cell - 0.5;
                double sum = 0.0;
                for (int n = 0; n < kColorNameCount; ++n) {
                    const double dr = r - kPrototypes[n][0];
                    const double dg = g - kPrototypes[n][1];
                    const double db = b - kPrototypes[n][2];
                    const double d_sq = dr * dr + dg * dg + db * db;
                    const double p = std::exp(-d_sq / (2.0 * kTau * kTau));
                    out.table(row, n) = p;
                    sum += p;
                }
                out.table.row(row) /= sum;
            }
        }
    }
    return out;
}

void validate_color_table(const ColorNameTable& table) {
    const int bins = table.bins_per_channel;
    if (bins < 1 || bins > 256)
        throw ContractError("color table: bins_per_channel out of range");
    if (table.table.rows() != static_cast<Eigen::Index>(bins) * bins * bins ||
        table.table.cols() != kColorNameCount)
        throw ContractError("color table: wrong shape");
    for (Eigen::Index i = 0; i < table.table.rows(); ++i) {
        if ((table.table.row(i).array() < 0.0).any())
            throw ContractError("color table: negative probability");
        if (std::abs(table.table.row(i).sum() - 1.0) > 1e-9)
            throw ContractError("color table: row does not sum to 1");
    }
}

Eigen::Matrix<double, kColorNameCount, 1> rgb_to_cn(std::uint8_t r, std::uint8_t g,
                                                    std::uint8_t b,
                                                    const ColorNameTable& table) {
    const int bins = table.bins_per_channel;
    const Eigen::Index row =
        (static_cast<Eigen::Index>(channel_bin(r, bins)) * bins + channel_bin(g, bins)) * bins +
        channel_bin(b, bins);
    return table.table.row(row).transpose();
}

DescriptorSet dense_color(const RasterImage& image, const ForegroundMask& mask, ColorMode mode,
                          const ColorNameTable* table, int step, int scale_count) {
    if (mask.width() != image.width || mask.height() != image.height)
        throw ContractError("dense_color: image and mask dimensions differ");
    if (scale_count < 1) throw ContractError("dense_color: scale_count must be >= 1");
    if (mode == ColorMode::cn && table == nullptr)
        throw ContractError("dense_color: cn mode requires a color-name table");

    // Patch sizes 8 and 16 for the two standard scales, doubling beyond.
    std::vector<int> sizes(scale_count);
    for (int i = 0; i < scale_count; ++i) sizes[i] = 8 << i;
    const SamplingGrid grid = build_grid(mask, step, sizes, 0.5);

    DescriptorSet set;
    set.dimension = mode == ColorMode::cn ? kColorNameCount : 3;
    set.vectors.resize(static_cast<Eigen::Index>(grid.keypoints.size()), set.dimension);
    set.positions.reserve(grid.keypoints.size());
    set.scale_index.reserve(grid.keypoints.size());

    for (std::size_t i = 0; i < grid.keypoints.size(); ++i) {
        const auto& kp = grid.keypoints[i];
        const int s = grid.scales[kp.scale];
        const int x0 = std::max(0, kp.x - s / 2);
        const int y0 = std::max(0, kp.y - s / 2);
        const int x1 = std::min(image.width - 1, kp.x - s / 2 + s - 1);
        const int y1 = std::min(image.height - 1, kp.y - s / 2 + s - 1);

        double sum[3] = {0.0, 0.0, 0.0};
        for (int y = y0; y <= y1; ++y) {
            for (int x = x0; x <= x1; ++x) {
                const std::uint8_t* p = image.pixel(x, y);
                sum[0] += p[0];
                sum[1] += p[1];
                sum[2] += p[2];
            }
        }
        const double area = static_cast<double>(x1 - x0 + 1) * (y1 - y0 + 1);
        const double mean[3] = {sum[0] / area, sum[1] / area, sum[2] / area};

        const Eigen::Index row = static_cast<Eigen::Index>(i);
        if (mode == ColorMode::rgb) {
            for (int c = 0; c < 3; ++c)
                set.vectors(row, c) = static_cast<float>(mean[c] / 255.0);
        } else {
            auto to_byte = [](double v) {
                return static_cast<std::uint8_t>(std::clamp<long>(std::lround(v), 0, 255));
            };
            const auto cn = rgb_to_cn(to_byte(mean[0]), to_byte(mean[1]), to_byte(mean[2]), *table);
            for (int c = 0; c < kColorNameCount; ++c)
                set.vectors(row, c) = static_cast<float>(cn[c]);
        }
        set.positions.emplace_back(kp.x, kp.y);
        set.scale_index.push_back(kp.scale);
    }
    return set;
}

}  // namespace stim

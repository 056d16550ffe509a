#include "stim/sift.hpp"

#include <cmath>

#include "stim/errors.hpp"
#include "stim/grid.hpp"

namespace stim {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kClipThreshold = 0.2;

inline double gradient_x(const GrayArray& v, int x, int y, int w) {
    const int xp = x + 1 < w ? x + 1 : w - 1;
    const int xm = x > 0 ? x - 1 : 0;
    return 0.5 * (v(y, xp) - v(y, xm));
}

inline double gradient_y(const GrayArray& v, int x, int y, int h) {
    const int yp = y + 1 < h ? y + 1 : h - 1;
    const int ym = y > 0 ? y - 1 : 0;
    return 0.5 * (v(yp, x) - v(ym, x));
}

}  // namespace

std::vector<int> sift_patch_sizes(int scale_count) {
    if (scale_count < 1) throw ContractError("sift_patch_sizes: scale_count must be >= 1");
    std::vector<int> sizes(scale_count);
    for (int i = 0; i < scale_count; ++i) sizes[i] = 16 + 8 * i;
    return sizes;
}

Eigen::VectorXf sift_at(const GrayImage& gray, int x, int y, int patch_size) {
    const int w = gray.width();
    const int h = gray.height();
    if (patch_size < 1) throw ContractError("sift_at: patch_size must be >= 1");
    if (x < 0 || x >= w || y < 0 || y >= h) throw ContractError("sift_at: center out of bounds");

    const int x0 = std::max(0, x - patch_size / 2);
    const int y0 = std::max(0, y - patch_size / 2);
    const int x1 = std::min(w - 1, x - patch_size / 2 + patch_size - 1);
    const int y1 = std::min(h - 1, y - patch_size / 2 + patch_size - 1);

    const double sigma = patch_size / 2.0;
    const double inv_two_sigma_sq = 1.0 / (2.0 * sigma * sigma);
    const double cells_per_pixel = 4.0 / patch_size;

    double hist[kSiftDimension] = {0.0};
    for (int py = y0; py <= y1; ++py) {
        const double dy = py - y + 0.5;
        for (int px = x0; px <= x1; ++px) {
            const double dx = px - x + 0.5;
            const double gx = gradient_x(gray.values, px, py, w);
            const double gy = gradient_y(gray.values, px, py, h);
            const double mag = std::sqrt(gx * gx + gy * gy);
            if (mag == 0.0) continue;

            double theta = std::atan2(gy / mag, gx / mag);
            if (theta < 0.0) theta += kTwoPi;

            const double weight = mag * std::exp(-(dx * dx + dy * dy) * inv_two_sigma_sq);
            const double cx = dx * cells_per_pixel + 1.5;
            const double cy = dy * cells_per_pixel + 1.5;
            const double ob = theta * (8.0 / kTwoPi);

            const int cx0 = static_cast<int>(std::floor(cx));
            const int cy0 = static_cast<int>(std::floor(cy));
            const int ob0 = static_cast<int>(std::floor(ob));
            const double fx = cx - cx0;
            const double fy = cy - cy0;
            const double fo = ob - ob0;

            for (int iy = 0; iy < 2; ++iy) {
                const int cyi = cy0 + iy;
                if (cyi < 0 || cyi > 3) continue;
                const double wy = iy ? fy : 1.0 - fy;
                for (int ix = 0; ix < 2; ++ix) {
                    const int cxi = cx0 + ix;
                    if (cxi < 0 || cxi > 3) continue;
                    const double wx = ix ? fx : 1.0 - fx;
                    for (int io = 0; io < 2; ++io) {
                        const int obi = (ob0 + io) & 7;
                        const double wo = io ? fo : 1.0 - fo;
                        hist[(cyi * 4 + cxi) * 8 + obi] += weight * wy * wx * wo;
                    }
                }
            }
        }
    }

    double norm_sq = 0.0;
    for (double v : hist) norm_sq += v * v;
    Eigen::VectorXf out = Eigen::VectorXf::Zero(kSiftDimension);
    if (norm_sq == 0.0) return out;

    double norm = std::sqrt(norm_sq);
    for (double& v : hist) {
        v /= norm;
        if (v > kClipThreshold) v = kClipThreshold;
    }
    norm_sq = 0.0;
    for (double v : hist) norm_sq += v * v;
    norm = std::sqrt(norm_sq);
    for (int i = 0; i < kSiftDimension; ++i)
        out[i] = static_cast<float>(hist[i] / norm);
    return out;
}

DescriptorSet dense_sift(const GrayImage& gray, const ForegroundMask& mask, int step,
                         int scale_count) {
    if (gray.width() != mask.width() || gray.height() != mask.height())
        throw ContractError("dense_sift: image and mask dimensions differ");

    const SamplingGrid grid = build_grid(mask, step, sift_patch_sizes(scale_count), 0.5);

    DescriptorSet set;
    set.dimension = kSiftDimension;
    set.vectors.resize(static_cast<Eigen::Index>(grid.keypoints.size()), kSiftDimension);
    set.positions.reserve(grid.keypoints.size());
    set.scale_index.reserve(grid.keypoints.size());
    for (std::size_t i = 0; i < grid.keypoints.size(); ++i) {
        const auto& kp = grid.keypoints[i];
        set.vectors.row(static_cast<Eigen::Index>(i)) =
            sift_at(gray, kp.x, kp.y, grid.scales[kp.scale]).transpose();
        set.positions.emplace_back(kp.x, kp.y);
        set.scale_index.push_back(kp.scale);
    }
    return set;
}

}  // namespace stim

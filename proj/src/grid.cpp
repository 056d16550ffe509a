#include "stim/grid.hpp"

#include <algorithm>

#include "stim/errors.hpp"

namespace stim {

SamplingGrid build_grid(const ForegroundMask& mask, int step, std::vector<int> scales,
                        double coverage_threshold) {
    if (step < 1) throw ContractError("build_grid: step must be >= 1");
    if (scales.empty()) throw ContractError("build_grid: scales must be non-empty");
    for (int s : scales)
        if (s < 1) throw ContractError("build_grid: patch sizes must be >= 1");
    std::sort(scales.begin(), scales.end());
    scales.erase(std::unique(scales.begin(), scales.end()), scales.end());

    const int w = mask.width();
    const int h = mask.height();

    // Summed-area table over the mask; integral(y, x) counts foreground in
    // the rectangle [0, x) x [0, y).
    Eigen::Array<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> integral(h + 1,
                                                                                         w + 1);
    integral.row(0).setZero();
    for (int y = 0; y < h; ++y) {
        integral(y + 1, 0) = 0;
        std::int64_t row_sum = 0;
        for (int x = 0; x < w; ++x) {
            row_sum += mask.values(y, x) ? 1 : 0;
            integral(y + 1, x + 1) = integral(y, x + 1) + row_sum;
        }
    }
    auto rect_count = [&](int x0, int y0, int x1, int y1) {  // inclusive corners
        return integral(y1 + 1, x1 + 1) - integral(y0, x1 + 1) - integral(y1 + 1, x0) +
               integral(y0, x0);
    };

    SamplingGrid grid;
    grid.step = step;
    grid.scales = scales;
    for (int y = 0; y < h; y += step) {
        for (int x = 0; x < w; x += step) {
            for (std::size_t si = 0; si < scales.size(); ++si) {
                const int s = scales[si];
                const int x0 = std::max(0, x - s / 2);
                const int y0 = std::max(0, y - s / 2);
                const int x1 = std::min(w - 1, x - s / 2 + s - 1);
                const int y1 = std::min(h - 1, y - s / 2 + s - 1);
                if (x1 < x0 || y1 < y0) continue;
                const std::int64_t area =
                    static_cast<std::int64_t>(x1 - x0 + 1) * (y1 - y0 + 1);
                const std::int64_t fg = rect_count(x0, y0, x1, y1);
                const double coverage = static_cast<double>(fg) / static_cast<double>(area);
                if (coverage >= coverage_threshold)
                    grid.keypoints.push_back({x, y, static_cast<int>(si)});
            }
        }
    }
    return grid;
}

}  // namespace stim

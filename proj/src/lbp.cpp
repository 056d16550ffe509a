#include "stim/lbp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "stim/errors.hpp"

namespace stim {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kTieEpsilon = 1e-12;

inline double sample_bilinear(const GrayArray& v, double sx, double sy) {
    const int x0 = static_cast<int>(std::floor(sx));
    const int y0 = static_cast<int>(std::floor(sy));
    const double fx = sx - x0;
    const double fy = sy - y0;
    const double top = (1.0 - fx) * v(y0, x0) + fx * v(y0, x0 + 1);
    const double bottom = (1.0 - fx) * v(y0 + 1, x0) + fx * v(y0 + 1, x0 + 1);
    return (1.0 - fy) * top + fy * bottom;
}

int circular_transitions(int code, int p) {
    int t = 0;
    for (int i = 0; i < p; ++i) {
        const int a = (code >> i) & 1;
        const int b = (code >> ((i + 1) % p)) & 1;
        t += a != b;
    }
    return t;
}

int min_rotation(int code, int p) {
    const int mask = (1 << p) - 1;
    int best = code;
    for (int k = 1; k < p; ++k) {
        const int rotated = ((code >> k) | (code << (p - k))) & mask;
        best = std::min(best, rotated);
    }
    return best;
}

void check_neighbors(int p) {
    if (p != 8 && p != 16) throw ContractError("LBP neighbor count must be 8 or 16");
}

}  // namespace

std::vector<std::pair<double, double>> lbp_neighbor_offsets(int neighbors, double radius) {
    check_neighbors(neighbors);
    if (radius <= 0.0) throw ContractError("LBP radius must be positive");
    std::vector<std::pair<double, double>> offsets(neighbors);
    for (int k = 0; k < neighbors; ++k) {
        const double angle = kTwoPi * k / neighbors;
        offsets[k] = {std::round(256.0 * radius * std::cos(angle)) / 256.0,
                      std::round(256.0 * radius * std::sin(angle)) / 256.0};
    }
    return offsets;
}

int lbp_valid_margin(double radius) {
    return static_cast<int>(std::ceil(radius)) + 1;
}

int lbp_code(const GrayImage& gray, int x, int y, int neighbors, double radius) {
    const int margin = lbp_valid_margin(radius);
    if (x < margin || y < margin || x > gray.width() - 1 - margin ||
        y > gray.height() - 1 - margin)
        throw ContractError("lbp_code: center too close to the border");

    const auto offsets = lbp_neighbor_offsets(neighbors, radius);
    const double center = gray.values(y, x);
    int code = 0;
    for (int k = 0; k < neighbors; ++k) {
        const double sample =
            sample_bilinear(gray.values, x + offsets[k].first, y + offsets[k].second);
        if (sample >= center - kTieEpsilon) code |= 1 << k;
    }
    return code;
}

MappingTable build_mapping(int neighbors, LbpMapping mapping) {
    check_neighbors(neighbors);
    const int codes = 1 << neighbors;

    MappingTable table;
    table.neighbors = neighbors;
    table.mapping = mapping;
    table.code_to_bin.assign(codes, -1);

    switch (mapping) {
        case LbpMapping::u2: {
            int uniform = 0;
            for (int c = 0; c < codes; ++c)
                if (circular_transitions(c, neighbors) <= 2) ++uniform;
            table.bins = uniform + 1;
            int next = 0;
            for (int c = 0; c < codes; ++c)
                table.code_to_bin[c] =
                    circular_transitions(c, neighbors) <= 2 ? next++ : uniform;
            break;
        }
        case LbpMapping::ri: {
            std::vector<int> minima(codes);
            for (int c = 0; c < codes; ++c) minima[c] = min_rotation(c, neighbors);
            std::vector<int> distinct = minima;
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            table.bins = static_cast<int>(distinct.size());
            for (int c = 0; c < codes; ++c)
                table.code_to_bin[c] = static_cast<int>(
                    std::lower_bound(distinct.begin(), distinct.end(), minima[c]) -
                    distinct.begin());
            break;
        }
        case LbpMapping::riu2: {
            table.bins = neighbors + 2;
            for (int c = 0; c < codes; ++c)
                table.code_to_bin[c] = circular_transitions(c, neighbors) <= 2
                                           ? std::popcount(static_cast<unsigned>(c))
                                           : neighbors + 1;
            break;
        }
    }
    return table;
}

Eigen::VectorXd lbp_histogram(const GrayImage& gray, const ForegroundMask& mask,
                              const LbpSpec& spec) {
    if (gray.width() != mask.width() || gray.height() != mask.height())
        throw ContractError("lbp_histogram: image and mask dimensions differ");
    if (!((spec.neighbors == 8 && spec.radius == 1) ||
          (spec.neighbors == 16 && spec.radius == 2)))
        throw ContractError("lbp_histogram: supported neighborhoods are (8,1) and (16,2)");

    const MappingTable table = build_mapping(spec.neighbors, spec.mapping);
    const int margin = lbp_valid_margin(spec.radius);

    Eigen::VectorXd counts = Eigen::VectorXd::Zero(table.bins);
    double total = 0.0;
    for (int y = margin; y <= gray.height() - 1 - margin; ++y) {
        for (int x = margin; x <= gray.width() - 1 - margin; ++x) {
            if (!mask.foreground(x, y)) continue;
            const int code = lbp_code(gray, x, y, spec.neighbors, spec.radius);
            counts[table.code_to_bin[code]] += 1.0;
            total += 1.0;
        }
    }
    if (total > 0.0) counts /= total;
    return counts;
}

Eigen::VectorXd mslbp(const GrayImage& gray, const ForegroundMask& mask) {
    const Eigen::VectorXd fine = lbp_histogram(gray, mask, {8, 1, LbpMapping::u2});
    const Eigen::VectorXd coarse = lbp_histogram(gray, mask, {16, 2, LbpMapping::u2});
    Eigen::VectorXd out(fine.size() + coarse.size());
    out << fine, coarse;
    return out;
}

Eigen::VectorXd prico_lbp(const GrayImage& gray, const ForegroundMask& mask,
                          const std::vector<int>& offsets) {
    if (gray.width() != mask.width() || gray.height() != mask.height())
        throw ContractError("prico_lbp: image and mask dimensions differ");
    if (offsets.empty()) throw ContractError("prico_lbp: offsets must be non-empty");

    const MappingTable u2 = build_mapping(8, LbpMapping::u2);
    const MappingTable riu2 = build_mapping(8, LbpMapping::riu2);
    const int joint_bins = u2.bins * riu2.bins;  // 590
    const int margin = lbp_valid_margin(1.0);
    const int w = gray.width();
    const int h = gray.height();

    Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(joint_bins, static_cast<int>(offsets.size()));
    Eigen::VectorXd totals = Eigen::VectorXd::Zero(static_cast<int>(offsets.size()));

    for (int y = margin; y <= h - 1 - margin; ++y) {
        for (int x = margin; x <= w - 1 - margin; ++x) {
            if (!mask.foreground(x, y)) continue;

            const double gx = 0.5 * (gray.values(y, x + 1) - gray.values(y, x - 1));
            const double gy = 0.5 * (gray.values(y + 1, x) - gray.values(y - 1, x));
            const double mag_sq = gx * gx + gy * gy;
            double cos_t = 1.0, sin_t = 0.0;  // theta = 0 below the magnitude cutoff
            if (mag_sq >= 1e-12) {
                const double mag = std::sqrt(mag_sq);
                cos_t = gx / mag;
                sin_t = gy / mag;
            }

            const int p_bin = riu2.code_to_bin[lbp_code(gray, x, y, 8, 1.0)];
            for (std::size_t oi = 0; oi < offsets.size(); ++oi) {
                const double d = offsets[oi];
                const int qx = static_cast<int>(std::lround(x + d * cos_t));
                const int qy = static_cast<int>(std::lround(y + d * sin_t));
                if (qx < margin || qy < margin || qx > w - 1 - margin || qy > h - 1 - margin)
                    continue;
                const int q_bin = u2.code_to_bin[lbp_code(gray, qx, qy, 8, 1.0)];
                counts(q_bin * riu2.bins + p_bin, static_cast<int>(oi)) += 1.0;
                totals[static_cast<int>(oi)] += 1.0;
            }
        }
    }

    Eigen::VectorXd out(joint_bins * static_cast<int>(offsets.size()));
    for (std::size_t oi = 0; oi < offsets.size(); ++oi) {
        Eigen::VectorXd block = counts.col(static_cast<int>(oi));
        if (totals[static_cast<int>(oi)] > 0.0) block /= totals[static_cast<int>(oi)];
        out.segment(static_cast<Eigen::Index>(oi) * joint_bins, joint_bins) = block;
    }
    return out;
}

}  // namespace stim

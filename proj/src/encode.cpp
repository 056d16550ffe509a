#include "stim/encode.hpp"

#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "stim/errors.hpp"

namespace stim {
namespace {

int nearest_word(const Eigen::VectorXd& x, const Eigen::MatrixXd& centers) {
    int best = 0;
    double best_d = (x.transpose() - centers.row(0)).squaredNorm();
    for (int c = 1; c < centers.rows(); ++c) {
        const double d = (x.transpose() - centers.row(c)).squaredNorm();
        if (d < best_d) {
            best_d = d;
            best = c;
        }
    }
    return best;
}

void check_dims(const DescriptorSet& features, int expected, const char* who) {
    if (features.size() > 0 && features.dimension != expected)
        throw ContractError(std::string(who) + ": feature dimension does not match model");
}

inline Eigen::Index pair_bin(int lo, int hi, int k) {
    return static_cast<Eigen::Index>(lo) * k - static_cast<Eigen::Index>(lo) * (lo - 1) / 2 +
           (hi - lo);
}

}  // namespace

Eigen::VectorXd bow_raw_counts(const DescriptorSet& features, const Codebook& codebook) {
    check_dims(features, codebook.dimension, "bow_encode");
    Eigen::VectorXd counts = Eigen::VectorXd::Zero(codebook.k);
    for (Eigen::Index i = 0; i < features.size(); ++i) {
        const Eigen::VectorXd x = features.vectors.row(i).cast<double>();
        counts[nearest_word(x, codebook.centers)] += 1.0;
    }
    return counts;
}

EncodedVector bow_encode(const DescriptorSet& features, const Codebook& codebook) {
    Eigen::VectorXd counts = bow_raw_counts(features, codebook);
    const double total = counts.sum();
    if (total > 0.0) counts /= total;
    EncodedVector out;
    out.dimension = codebook.k;
    out.values = counts.cwiseSqrt();
    out.encoder_id = "bow";
    out.normalization = "l1+hellinger";
    return out;
}

Eigen::VectorXd ifv_statistics(const DescriptorSet& features, const GaussianMixture& gmm) {
    check_dims(features, gmm.dimension, "ifv_encode");
    const int k = gmm.k;
    const int d = gmm.dimension;
    Eigen::VectorXd stats = Eigen::VectorXd::Zero(2 * k * d);
    const Eigen::Index n = features.size();
    if (n == 0) return stats;

    const Eigen::MatrixXd sigma = gmm.variances.cwiseSqrt();
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::VectorXd x = features.vectors.row(i).cast<double>();
        const Eigen::VectorXd resp = gmm_responsibilities(gmm, x);
        for (int c = 0; c < k; ++c) {
            const auto u =
                ((x.transpose() - gmm.means.row(c)).array() / sigma.row(c).array());
            stats.segment(static_cast<Eigen::Index>(c) * d, d) += (resp[c] * u).matrix();
            stats.segment(static_cast<Eigen::Index>(k + c) * d, d) +=
                (resp[c] * (u.square() - 1.0)).matrix();
        }
    }
    for (int c = 0; c < k; ++c) {
        const double scale = 1.0 / (static_cast<double>(n) * std::sqrt(gmm.weights[c]));
        stats.segment(static_cast<Eigen::Index>(c) * d, d) *= scale;
        stats.segment(static_cast<Eigen::Index>(k + c) * d, d) *= scale;
    }
    return stats;
}

EncodedVector ifv_encode(const DescriptorSet& features, const GaussianMixture& gmm) {
    Eigen::VectorXd v = ifv_statistics(features, gmm);
    v = v.array().sign() * v.array().abs().sqrt();
    const double norm = v.norm();
    if (norm > 0.0) v /= norm;
    EncodedVector out;
    out.dimension = static_cast<int>(v.size());
    out.values = std::move(v);
    out.encoder_id = "ifv";
    out.normalization = "signed-sqrt+l2";
    return out;
}

RccCounts rcc_raw_counts(const DescriptorSet& features, const Codebook& codebook, int cell_size,
                         int radius) {
    check_dims(features, codebook.dimension, "rcc_encode");
    if (cell_size < 1 || radius < 0) throw ContractError("rcc_encode: bad cell size or radius");
    const Eigen::Index n = features.size();
    if (static_cast<Eigen::Index>(features.positions.size()) != n)
        throw ContractError("rcc_encode: features carry no positions");

    const int k = codebook.k;
    RccCounts counts;
    counts.unary = Eigen::VectorXd::Zero(k);
    counts.pairs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(k) * (k + 1) / 2);

    std::vector<int> words(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::VectorXd x = features.vectors.row(i).cast<double>();
        words[i] = nearest_word(x, codebook.centers);
        counts.unary[words[i]] += 1.0;
    }

    // Bucket features by grid cell; only same-cell pairs can co-occur.
    std::map<std::pair<int, int>, std::vector<Eigen::Index>> cells;
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& p = features.positions[i];
        cells[{p.y() / cell_size, p.x() / cell_size}].push_back(i);
    }

    const long radius_sq = static_cast<long>(radius) * radius;
    for (const auto& [cell, members] : cells) {
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                const auto& pa = features.positions[members[a]];
                const auto& pb = features.positions[members[b]];
                const long dx = pa.x() - pb.x();
                const long dy = pa.y() - pb.y();
                if (dx * dx + dy * dy > radius_sq) continue;
                const int lo = std::min(words[members[a]], words[members[b]]);
                const int hi = std::max(words[members[a]], words[members[b]]);
                counts.pairs[pair_bin(lo, hi, k)] += 1.0;
            }
        }
    }
    return counts;
}

EncodedVector rcc_encode(const DescriptorSet& features, const Codebook& codebook, int cell_size,
                         int radius) {
    RccCounts counts = rcc_raw_counts(features, codebook, cell_size, radius);
    const double unary_total = counts.unary.sum();
    if (unary_total > 0.0) counts.unary /= unary_total;
    const double pair_total = counts.pairs.sum();
    if (pair_total > 0.0) counts.pairs /= pair_total;

    EncodedVector out;
    out.dimension = static_cast<int>(counts.unary.size() + counts.pairs.size());
    out.values.resize(out.dimension);
    out.values << counts.unary.cwiseSqrt(), counts.pairs.cwiseSqrt();
    out.encoder_id = "rcc";
    out.normalization = "l1+hellinger per block";
    return out;
}

}  // namespace stim

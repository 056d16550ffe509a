#include "stim/kmeans.hpp"

#include <limits>
#include <vector>

#include "stim/errors.hpp"
#include "stim/rng.hpp"

namespace stim {
namespace {

using RowMatrixXd = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Nearest center by squared Euclidean distance, ties toward the lowest index.
inline int nearest_center(const RowMatrixXd& x, Eigen::Index row, const Eigen::MatrixXd& centers,
                          double* best_out) {
    int best = 0;
    double best_d = (x.row(row) - centers.row(0)).squaredNorm();
    for (int c = 1; c < centers.rows(); ++c) {
        const double d = (x.row(row) - centers.row(c)).squaredNorm();
        if (d < best_d) {
            best_d = d;
            best = c;
        }
    }
    if (best_out) *best_out = best_d;
    return best;
}

}  // namespace

Codebook kmeans_train(const FeatureMatrix& features, int k, std::uint64_t seed, int max_iter,
                      double tol, std::vector<double>* inertia_trace) {
    const Eigen::Index m = features.rows();
    const Eigen::Index d = features.cols();
    if (k < 1) throw ContractError("kmeans_train: k must be >= 1");
    if (m < k) throw ContractError("kmeans_train: need at least k feature rows");

    const RowMatrixXd x = features.cast<double>();
    Rng rng(seed);

    // k-means++ seeding.
    Eigen::MatrixXd centers(k, d);
    Eigen::VectorXd min_d2 = Eigen::VectorXd::Constant(m, std::numeric_limits<double>::max());
    std::vector<char> chosen(m, 0);
    {
        const Eigen::Index first = static_cast<Eigen::Index>(rng.below(m));
        centers.row(0) = x.row(first);
        chosen[first] = 1;
        for (Eigen::Index i = 0; i < m; ++i)
            min_d2[i] = (x.row(i) - centers.row(0)).squaredNorm();
        for (int c = 1; c < k; ++c) {
            const double total = min_d2.sum();
            Eigen::Index pick = -1;
            if (total > 0.0) {
                const double r = rng.uniform() * total;
                double acc = 0.0;
                for (Eigen::Index i = 0; i < m; ++i) {
                    acc += min_d2[i];
                    if (acc >= r) {
                        pick = i;
                        break;
                    }
                }
                if (pick < 0) pick = m - 1;
            } else {
                // All remaining mass is zero (duplicated points); fall back to
                // the first unchosen row.
                for (Eigen::Index i = 0; i < m; ++i)
                    if (!chosen[i]) {
                        pick = i;
                        break;
                    }
                if (pick < 0) pick = 0;
            }
            centers.row(c) = x.row(pick);
            chosen[pick] = 1;
            for (Eigen::Index i = 0; i < m; ++i)
                min_d2[i] = std::min(min_d2[i], (x.row(i) - centers.row(c)).squaredNorm());
        }
    }

    std::vector<int> assign(m, 0);
    std::vector<double> dist(m, 0.0);
    double inertia = 0.0;
    double prev = -1.0;

    for (int iter = 0; iter < max_iter; ++iter) {
        inertia = 0.0;
        for (Eigen::Index i = 0; i < m; ++i) {
            assign[i] = nearest_center(x, i, centers, &dist[i]);
            inertia += dist[i];
        }
        if (inertia_trace) inertia_trace->push_back(inertia);
        if (iter > 0 && prev - inertia <= tol * prev) break;
        prev = inertia;

        Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, d);
        Eigen::VectorXd counts = Eigen::VectorXd::Zero(k);
        for (Eigen::Index i = 0; i < m; ++i) {
            sums.row(assign[i]) += x.row(i);
            counts[assign[i]] += 1.0;
        }
        for (int c = 0; c < k; ++c)
            if (counts[c] > 0.0) centers.row(c) = sums.row(c) / counts[c];

        // Re-seed empty clusters to the point farthest from its center.
        std::vector<char> taken(m, 0);
        for (int c = 0; c < k; ++c) {
            if (counts[c] > 0.0) continue;
            Eigen::Index far = -1;
            double far_d = -1.0;
            for (Eigen::Index i = 0; i < m; ++i) {
                if (taken[i]) continue;
                if (dist[i] > far_d) {
                    far_d = dist[i];
                    far = i;
                }
            }
            if (far >= 0) {
                centers.row(c) = x.row(far);
                taken[far] = 1;
            }
        }
    }

    Codebook book;
    book.k = k;
    book.dimension = static_cast<int>(d);
    book.centers = std::move(centers);
    book.seed = seed;
    book.inertia = inertia;
    return book;
}

}  // namespace stim

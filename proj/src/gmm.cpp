#include "stim/gmm.hpp"

#include <cmath>
#include <limits>

#include "stim/errors.hpp"
#include "stim/kmeans.hpp"

namespace stim {
namespace {

using RowMatrixXd = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr double kLogTwoPi = 1.8378770664093454835606594728112;

// Per-row log densities for every component, as an m x k matrix.
Eigen::MatrixXd component_log_densities(const RowMatrixXd& x, const GaussianMixture& gmm) {
    const Eigen::Index m = x.rows();
    Eigen::MatrixXd logp(m, gmm.k);
    for (int c = 0; c < gmm.k; ++c) {
        const auto var = gmm.variances.row(c).array();
        const double log_norm = -0.5 * (gmm.dimension * kLogTwoPi + var.log().sum());
        logp.col(c) =
            ((x.rowwise() - gmm.means.row(c)).array().square().rowwise() / (2.0 * var))
                .rowwise()
                .sum()
                .matrix() * -1.0;
        logp.col(c).array() += log_norm + std::log(gmm.weights[c]);
    }
    return logp;
}

// Rowwise logsumexp.
Eigen::VectorXd log_sum_exp_rows(const Eigen::MatrixXd& logp) {
    const Eigen::VectorXd row_max = logp.rowwise().maxCoeff();
    return row_max.array() +
           (logp.colwise() - row_max).array().exp().rowwise().sum().log();
}

}  // namespace

GaussianMixture gmm_train(const FeatureMatrix& features, int k, std::uint64_t seed, int max_iter,
                          double tol, double var_floor_scale, std::vector<double>* ll_trace) {
    const Eigen::Index m = features.rows();
    const Eigen::Index d = features.cols();
    if (k < 1) throw ContractError("gmm_train: k must be >= 1");
    if (m < k) throw ContractError("gmm_train: need at least k feature rows");

    const RowMatrixXd x = features.cast<double>();

    const Eigen::RowVectorXd data_mean = x.colwise().mean();
    const Eigen::RowVectorXd data_var =
        (x.rowwise() - data_mean).array().square().colwise().mean();
    double var_floor = var_floor_scale * data_var.mean();
    if (!(var_floor > 0.0)) var_floor = 1e-12;

    GaussianMixture gmm;
    gmm.k = k;
    gmm.dimension = static_cast<int>(d);
    gmm.weights = Eigen::VectorXd::Constant(k, 1.0 / k);
    gmm.variances = Eigen::MatrixXd::Zero(k, d);

    // Initialize from a k-means partition of the same data.
    {
        const Codebook book = kmeans_train(features, k, seed);
        gmm.means = book.centers;
        Eigen::VectorXd counts = Eigen::VectorXd::Zero(k);
        Eigen::MatrixXd sq_sums = Eigen::MatrixXd::Zero(k, d);
        for (Eigen::Index i = 0; i < m; ++i) {
            int best = 0;
            double best_d = (x.row(i) - gmm.means.row(0)).squaredNorm();
            for (int c = 1; c < k; ++c) {
                const double dist = (x.row(i) - gmm.means.row(c)).squaredNorm();
                if (dist < best_d) {
                    best_d = dist;
                    best = c;
                }
            }
            counts[best] += 1.0;
            sq_sums.row(best) += (x.row(i) - gmm.means.row(best)).array().square().matrix();
        }
        for (int c = 0; c < k; ++c) {
            if (counts[c] > 0.0) {
                gmm.weights[c] = counts[c] / static_cast<double>(m);
                gmm.variances.row(c) = (sq_sums.row(c) / counts[c]).cwiseMax(var_floor);
            } else {
                gmm.weights[c] = 1.0 / static_cast<double>(10 * m);
                gmm.variances.row(c) = data_var.cwiseMax(var_floor);
            }
        }
        gmm.weights /= gmm.weights.sum();
    }

    double prev_ll = -std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < max_iter; ++iter) {
        // E step.
        const Eigen::MatrixXd logp = component_log_densities(x, gmm);
        const Eigen::VectorXd row_ll = log_sum_exp_rows(logp);
        const double ll = row_ll.sum();
        Eigen::MatrixXd resp = (logp.colwise() - row_ll).array().exp();

        const Eigen::VectorXd row_sums = resp.rowwise().sum();
        if (((row_sums.array() - 1.0).abs() > 1e-6).any())
            throw ContractError("gmm_train: responsibilities do not sum to 1");

        if (ll_trace) ll_trace->push_back(ll);
        if (iter > 0 && ll - prev_ll <= tol * std::abs(prev_ll)) break;
        prev_ll = ll;

        // M step.
        const Eigen::VectorXd nk = resp.colwise().sum();
        for (int c = 0; c < k; ++c) {
            if (nk[c] <= 0.0) continue;  // keeps the previous parameters
            gmm.means.row(c) = (resp.col(c).transpose() * x) / nk[c];
            gmm.variances.row(c) =
                ((x.rowwise() - gmm.means.row(c)).array().square().colwise() *
                 resp.col(c).array())
                    .colwise()
                    .sum() /
                nk[c];
            gmm.variances.row(c) = gmm.variances.row(c).cwiseMax(var_floor);
        }
        gmm.weights = nk / static_cast<double>(m);
        gmm.weights = gmm.weights.cwiseMax(1e-12);
        gmm.weights /= gmm.weights.sum();
    }
    return gmm;
}

double gmm_log_likelihood(const GaussianMixture& gmm, const FeatureMatrix& features) {
    if (features.cols() != gmm.dimension)
        throw ContractError("gmm_log_likelihood: dimension mismatch");
    const RowMatrixXd x = features.cast<double>();
    return log_sum_exp_rows(component_log_densities(x, gmm)).sum();
}

Eigen::VectorXd gmm_responsibilities(const GaussianMixture& gmm, const Eigen::VectorXd& x) {
    if (x.size() != gmm.dimension)
        throw ContractError("gmm_responsibilities: dimension mismatch");
    Eigen::VectorXd logp(gmm.k);
    for (int c = 0; c < gmm.k; ++c) {
        const auto var = gmm.variances.row(c).array();
        const double log_norm = -0.5 * (gmm.dimension * kLogTwoPi + var.log().sum());
        const double quad =
            ((x.transpose() - gmm.means.row(c)).array().square() / (2.0 * var)).sum();
        logp[c] = log_norm - quad + std::log(gmm.weights[c]);
    }
    const double max = logp.maxCoeff();
    Eigen::VectorXd resp = (logp.array() - max).exp();
    return resp / resp.sum();
}

}  // namespace stim

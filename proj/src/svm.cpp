#include "stim/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "stim/errors.hpp"

namespace stim {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SmoState {
    Eigen::VectorXd alpha;
    Eigen::VectorXd grad;  // gradient of 0.5*a'Qa - e'a
};

// Maximal-violating-pair selection. Returns false when every pair satisfies
// the KKT conditions within eps.
bool select_pair(const SmoState& s, const std::vector<int>& y, double c, double eps, int& out_i,
                 int& out_j, double& m_up, double& m_low) {
    const Eigen::Index n = s.alpha.size();
    m_up = -kInf;
    m_low = kInf;
    out_i = -1;
    out_j = -1;
    for (Eigen::Index t = 0; t < n; ++t) {
        const double v = -y[t] * s.grad[t];
        const bool in_up = (y[t] > 0 && s.alpha[t] < c) || (y[t] < 0 && s.alpha[t] > 0.0);
        const bool in_low = (y[t] > 0 && s.alpha[t] > 0.0) || (y[t] < 0 && s.alpha[t] < c);
        if (in_up && v > m_up) {
            m_up = v;
            out_i = static_cast<int>(t);
        }
        if (in_low && v < m_low) {
            m_low = v;
            out_j = static_cast<int>(t);
        }
    }
    return out_i >= 0 && out_j >= 0 && m_up - m_low > eps;
}

Eigen::VectorXd weights_from_alpha(const Eigen::MatrixXd& x, const std::vector<int>& y,
                                   const Eigen::VectorXd& alpha) {
    Eigen::VectorXd w = Eigen::VectorXd::Zero(x.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        if (alpha[i] != 0.0) w += alpha[i] * y[i] * x.row(i).transpose();
    return w;
}

// Bias from the KKT interval midpoint: for free support vectors this equals
// y_i - w.x_i exactly.
double bias_from_state(const Eigen::MatrixXd& x, const std::vector<int>& y,
                       const Eigen::VectorXd& alpha, const Eigen::VectorXd& w, double c) {
    double up = -kInf, low = kInf;
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        const double v = y[i] - w.dot(x.row(i).transpose());
        const bool in_up = (y[i] > 0 && alpha[i] < c) || (y[i] < 0 && alpha[i] > 0.0);
        const bool in_low = (y[i] > 0 && alpha[i] > 0.0) || (y[i] < 0 && alpha[i] < c);
        if (in_up) up = std::max(up, v);
        if (in_low) low = std::min(low, v);
    }
    if (up == -kInf && low == kInf) return 0.0;
    if (up == -kInf) return low;
    if (low == kInf) return up;
    return 0.5 * (up + low);
}

BinaryLinearModel train_binary_kernel(const Eigen::MatrixXd& x, const std::vector<int>& y,
                                      const TrainConfig& config, const Eigen::MatrixXd& kernel,
                                      std::vector<double>* objective_trace) {
    const Eigen::Index n = x.rows();
    const double c = config.c;

    SmoState s;
    s.alpha = Eigen::VectorXd::Zero(n);
    s.grad = Eigen::VectorXd::Constant(n, -1.0);

    double kkt_eps = std::min(config.tol, 1e-3);
    const long max_updates = static_cast<long>(config.max_epochs) * n;
    long updates = 0;
    bool certified = false;

    auto record_objective = [&]() {
        if (!objective_trace) return;
        double sum_alpha = s.alpha.sum();
        const Eigen::VectorXd w = weights_from_alpha(x, y, s.alpha);
        objective_trace->push_back(0.5 * w.squaredNorm() - sum_alpha);
    };

    record_objective();
    while (updates < max_updates) {
        int i = -1, j = -1;
        double m_up = 0.0, m_low = 0.0;
        if (!select_pair(s, y, c, kkt_eps, i, j, m_up, m_low)) {
            // KKT-optimal at the current eps; certify by the primal-dual gap.
            const Eigen::VectorXd w = weights_from_alpha(x, y, s.alpha);
            const double b = bias_from_state(x, y, s.alpha, w, c);
            double hinge = 0.0;
            for (Eigen::Index t = 0; t < n; ++t)
                hinge += std::max(0.0, 1.0 - y[t] * (w.dot(x.row(t).transpose()) + b));
            const double primal = 0.5 * w.squaredNorm() + c * hinge;
            const double dual = s.alpha.sum() - 0.5 * w.squaredNorm();
            if (primal - dual <= config.tol * std::max(1.0, std::abs(primal))) {
                certified = true;
                break;
            }
            kkt_eps *= 0.1;  // tighten and keep optimizing
            continue;
        }

        // Two-variable subproblem along d = y_i e_i - y_j e_j.
        const double eta = kernel(i, i) + kernel(j, j) - 2.0 * kernel(i, j);
        const double slope = y[i] * s.grad[i] - y[j] * s.grad[j];  // < 0 here
        double t_max = kInf, t_min = -kInf;
        if (y[i] > 0) {
            t_max = std::min(t_max, c - s.alpha[i]);
            t_min = std::max(t_min, -s.alpha[i]);
        } else {
            t_max = std::min(t_max, s.alpha[i]);
            t_min = std::max(t_min, s.alpha[i] - c);
        }
        if (y[j] > 0) {
            t_max = std::min(t_max, s.alpha[j]);
            t_min = std::max(t_min, s.alpha[j] - c);
        } else {
            t_max = std::min(t_max, c - s.alpha[j]);
            t_min = std::max(t_min, -s.alpha[j]);
        }
        double t = eta > 0.0 ? -slope / eta : t_max;
        t = std::clamp(t, t_min, t_max);

        s.alpha[i] += y[i] * t;
        s.alpha[j] -= y[j] * t;
        s.alpha[i] = std::clamp(s.alpha[i], 0.0, c);
        s.alpha[j] = std::clamp(s.alpha[j], 0.0, c);
        for (Eigen::Index m = 0; m < n; ++m)
            s.grad[m] += t * y[m] * (kernel(m, i) - kernel(m, j));

        ++updates;
        if (updates % n == 0) record_objective();
    }

    if (!certified) {
        // Final certification attempt at whatever point we stopped.
        const Eigen::VectorXd w = weights_from_alpha(x, y, s.alpha);
        const double b = bias_from_state(x, y, s.alpha, w, c);
        double hinge = 0.0;
        for (Eigen::Index t = 0; t < n; ++t)
            hinge += std::max(0.0, 1.0 - y[t] * (w.dot(x.row(t).transpose()) + b));
        const double primal = 0.5 * w.squaredNorm() + c * hinge;
        const double dual = s.alpha.sum() - 0.5 * w.squaredNorm();
        if (primal - dual > config.tol * std::max(1.0, std::abs(primal)))
            throw ContractError("train_binary: failed to certify optimality within max_epochs");
    }

    BinaryLinearModel model;
    model.weights = weights_from_alpha(x, y, s.alpha);
    model.bias = bias_from_state(x, y, s.alpha, model.weights, c);
    model.c = c;
    return model;
}

}  // namespace

double binary_objective(const BinaryLinearModel& model, const Eigen::MatrixXd& x,
                        const std::vector<int>& y) {
    double hinge = 0.0;
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        hinge += std::max(0.0, 1.0 - y[i] * model.score(x.row(i).transpose()));
    return 0.5 * model.weights.squaredNorm() + model.c * hinge;
}

BinaryLinearModel train_binary(const Eigen::MatrixXd& x, const std::vector<int>& y,
                               const TrainConfig& config, std::vector<double>* objective_trace) {
    const Eigen::Index n = x.rows();
    if (n < 1) throw ContractError("train_binary: empty training set");
    if (static_cast<Eigen::Index>(y.size()) != n)
        throw ContractError("train_binary: label count does not match rows");
    if (config.c <= 0.0 || config.tol <= 0.0)
        throw ContractError("train_binary: C and tol must be positive");
    bool has_pos = false, has_neg = false;
    for (int v : y) {
        if (v == 1) has_pos = true;
        else if (v == -1) has_neg = true;
        else throw ContractError("train_binary: labels must be +1 or -1");
    }
    if (!has_pos || !has_neg) {
        BinaryLinearModel model;
        model.weights = Eigen::VectorXd::Zero(x.cols());
        model.bias = has_pos ? 1.0 : -1.0;
        model.c = config.c;
        model.degenerate = true;
        return model;
    }
    const Eigen::MatrixXd kernel = x * x.transpose();
    return train_binary_kernel(x, y, config, kernel, objective_trace);
}

MultiClassModel train_ova(const Eigen::MatrixXd& x, const std::vector<std::string>& labels,
                          const TrainConfig& config) {
    const Eigen::Index n = x.rows();
    if (static_cast<Eigen::Index>(labels.size()) != n)
        throw ContractError("train_ova: label count does not match rows");

    std::set<std::string> unique(labels.begin(), labels.end());
    if (unique.size() < 2) throw ContractError("train_ova: need at least 2 distinct classes");

    MultiClassModel model;
    model.classes.assign(unique.begin(), unique.end());  // sorted by std::set
    model.dimension = static_cast<int>(x.cols());

    const Eigen::MatrixXd kernel = x * x.transpose();
    std::vector<int> y(n);
    for (const std::string& cls : model.classes) {
        for (Eigen::Index i = 0; i < n; ++i) y[i] = labels[i] == cls ? 1 : -1;
        model.models.push_back(train_binary_kernel(x, y, config, kernel, nullptr));
    }
    return model;
}

Eigen::VectorXd decision_scores(const MultiClassModel& model, const Eigen::VectorXd& x) {
    if (x.size() != model.dimension)
        throw ContractError("decision_scores: dimension mismatch");
    Eigen::VectorXd scores(static_cast<Eigen::Index>(model.models.size()));
    for (std::size_t c = 0; c < model.models.size(); ++c)
        scores[static_cast<Eigen::Index>(c)] = model.models[c].score(x);
    return scores;
}

std::string predict(const MultiClassModel& model, const Eigen::VectorXd& x) {
    const Eigen::VectorXd scores = decision_scores(model, x);
    Eigen::Index best = 0;
    for (Eigen::Index c = 1; c < scores.size(); ++c)
        if (scores[c] > scores[best]) best = c;
    return model.classes[static_cast<std::size_t>(best)];
}

}  // namespace stim

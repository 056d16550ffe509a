#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace stim {

struct TrainConfig {
    double c = 1.0;         // hinge-loss weight
    double tol = 1e-4;      // certified optimality gap, relative
    int max_epochs = 1000;  // one epoch = N pair updates
    std::uint64_t seed = 0; // kept for config parity; the solver is deterministic
};

struct BinaryLinearModel {
    Eigen::VectorXd weights;
    double bias = 0.0;
    double c = 1.0;
    bool degenerate = false;  // single-label training set

    double score(const Eigen::VectorXd& x) const { return weights.dot(x) + bias; }
};

struct MultiClassModel {
    std::vector<std::string> classes;  // sorted label order
    std::vector<BinaryLinearModel> models;
    int dimension = 0;
};

// Minimizes 0.5*||w||^2 + C * sum hinge(y_i * (w.x_i + b)) by SMO-style pair
// updates on the dual (explicit, unregularized bias). Terminates when the
// primal-dual gap certifies the objective is within tol of the optimum;
// throws if max_epochs cannot reach that. `objective_trace`, when given,
// receives the dual minimization objective at epoch boundaries
// (non-increasing). A single-label input returns a degenerate model that
// scores everything toward that label.
BinaryLinearModel train_binary(const Eigen::MatrixXd& x, const std::vector<int>& y,
                               const TrainConfig& config,
                               std::vector<double>* objective_trace = nullptr);

// Primal objective of a model on (x, y); what train_binary minimizes.
double binary_objective(const BinaryLinearModel& model, const Eigen::MatrixXd& x,
                        const std::vector<int>& y);

// One binary model per class (that class = +1, rest = -1), classes sorted.
MultiClassModel train_ova(const Eigen::MatrixXd& x, const std::vector<std::string>& labels,
                          const TrainConfig& config);

Eigen::VectorXd decision_scores(const MultiClassModel& model, const Eigen::VectorXd& x);

// Argmax of the per-class scores; ties break toward the earlier class in
// sorted order.
std::string predict(const MultiClassModel& model, const Eigen::VectorXd& x);

}  // namespace stim

#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

namespace stim {

// TP / TT: exact label matches over total predictions.
double accuracy(const std::vector<std::string>& predictions,
                const std::vector<std::string>& truth);

struct ConfusionMatrix {
    std::vector<std::string> classes;
    Eigen::MatrixXi counts;          // row = truth, column = prediction
    Eigen::MatrixXd row_normalized;  // zero rows stay zero
};

ConfusionMatrix confusion(const std::vector<std::string>& predictions,
                          const std::vector<std::string>& truth,
                          const std::vector<std::string>& classes);

}  // namespace stim

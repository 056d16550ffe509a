#include "stim/metrics.hpp"

#include <algorithm>

#include "stim/errors.hpp"

namespace stim {

double accuracy(const std::vector<std::string>& predictions,
                const std::vector<std::string>& truth) {
    if (predictions.size() != truth.size())
        throw ContractError("accuracy: prediction and truth lengths differ");
    if (predictions.empty()) throw ContractError("accuracy: empty input");
    std::size_t tp = 0;
    for (std::size_t i = 0; i < predictions.size(); ++i)
        if (predictions[i] == truth[i]) ++tp;
    return static_cast<double>(tp) / static_cast<double>(predictions.size());
}

ConfusionMatrix confusion(const std::vector<std::string>& predictions,
                          const std::vector<std::string>& truth,
                          const std::vector<std::string>& classes) {
    if (predictions.size() != truth.size())
        throw ContractError("confusion: prediction and truth lengths differ");

    auto index_of = [&](const std::string& label) {
        const auto it = std::find(classes.begin(), classes.end(), label);
        if (it == classes.end())
            throw ContractError("confusion: label '" + label + "' not in class list");
        return static_cast<Eigen::Index>(it - classes.begin());
    };

    ConfusionMatrix cm;
    cm.classes = classes;
    const Eigen::Index c = static_cast<Eigen::Index>(classes.size());
    cm.counts = Eigen::MatrixXi::Zero(c, c);
    for (std::size_t i = 0; i < truth.size(); ++i)
        cm.counts(index_of(truth[i]), index_of(predictions[i])) += 1;

    cm.row_normalized = Eigen::MatrixXd::Zero(c, c);
    for (Eigen::Index r = 0; r < c; ++r) {
        const double total = cm.counts.row(r).sum();
        if (total > 0.0) cm.row_normalized.row(r) = cm.counts.row(r).cast<double>() / total;
    }
    return cm;
}

}  // namespace stim

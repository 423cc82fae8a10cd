#include "corrseg/eval.hpp"

#include <algorithm>

namespace corrseg {

namespace {

std::size_t joint_num_classes(const Labeling& pred, const Labeling& truth) {
    if (pred.size() != truth.size()) {
        throw std::invalid_argument("prediction and truth labelings differ in length");
    }
    return std::max(pred.num_classes(), truth.num_classes());
}

}  // namespace

AccuracyReport accuracy(const Labeling& pred, const Labeling& truth) {
    const std::size_t m = joint_num_classes(pred, truth);
    std::vector<std::int64_t> truth_count(m, 0);
    std::vector<std::int64_t> hit_count(m, 0);
    std::int64_t matches = 0;
    for (std::size_t k = 0; k < truth.size(); ++k) {
        const int t = truth.at(k);
        const int p = pred.at(k);
        if (p == t) {
            ++matches;
        }
        if (t != Labeling::kGap) {
            ++truth_count[static_cast<std::size_t>(t)];
            if (p == t) {
                ++hit_count[static_cast<std::size_t>(t)];
            }
        }
    }
    AccuracyReport report;
    report.per_class.resize(m);
    for (std::size_t c = 0; c < m; ++c) {
        // Classes absent from the truth score 0; the confusion matrix makes
        // the empty row visible.
        report.per_class[c] = truth_count[c] == 0
                                  ? 0.0
                                  : static_cast<double>(hit_count[c]) /
                                        static_cast<double>(truth_count[c]);
    }
    report.overall = static_cast<double>(matches) / static_cast<double>(truth.size());
    return report;
}

std::vector<std::vector<std::int64_t>> confusion(const Labeling& pred, const Labeling& truth) {
    const std::size_t m = joint_num_classes(pred, truth);
    std::vector<std::vector<std::int64_t>> counts(m + 1, std::vector<std::int64_t>(m + 1, 0));
    const auto index = [m](int label) {
        return label == Labeling::kGap ? m : static_cast<std::size_t>(label);
    };
    for (std::size_t k = 0; k < truth.size(); ++k) {
        ++counts[index(truth.at(k))][index(pred.at(k))];
    }
    return counts;
}

}  // namespace corrseg

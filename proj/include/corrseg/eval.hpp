#pragma once

#include <cstdint>

#include "corrseg/types.hpp"

namespace corrseg {

/// Point-wise segmentation accuracy. per_class[c] is the recall of class c:
/// the fraction of points whose true class is c that the prediction also
/// labels c. overall is the fraction of all points where prediction equals
/// truth; gap points match only a predicted gap.
struct AccuracyReport {
    std::vector<double> per_class;
    double overall = 0.0;
};

AccuracyReport accuracy(const Labeling& pred, const Labeling& truth);

/// (M+1) x (M+1) count matrix, rows = truth, columns = prediction, with the
/// gap label mapped to index M. Its trace over the labeling length equals
/// the overall accuracy.
std::vector<std::vector<std::int64_t>> confusion(const Labeling& pred, const Labeling& truth);

}  // namespace corrseg

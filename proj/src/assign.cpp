#include "corrseg/assign.hpp"

#include <cmath>
#include <string>

namespace corrseg {

std::size_t predicted_start(const SimilarityProfile& profile) {
    const std::vector<double>& v = profile.values();
    std::size_t best = 0;
    for (std::size_t n = 1; n < v.size(); ++n) {
        if (v[n] > v[best]) {
            best = n;
        }
    }
    return best;
}

Labeling assign_dense(const QMatrix& q) {
    std::vector<int> classes(q.rows());
    for (std::size_t k = 0; k < q.rows(); ++k) {
        std::size_t best = 0;
        for (std::size_t i = 0; i < q.cols(); ++i) {
            if (std::isinf(q.at(k, i))) {
                throw std::invalid_argument("Q matrix still holds sentinel entries at row " +
                                            std::to_string(k));
            }
            if (q.at(k, i) > q.at(k, best)) {
                best = i;
            }
        }
        classes[k] = static_cast<int>(best);
    }
    return Labeling(std::move(classes), q.cols());
}

Labeling assign_greedy_gaps(QMatrix q, const std::vector<std::size_t>& lengths) {
    const std::size_t rows = q.rows();
    const std::size_t cols = q.cols();
    if (lengths.size() != cols) {
        throw std::invalid_argument("one length per Q column required");
    }

    std::vector<int> z(rows, Labeling::kGap);
    for (;;) {
        // Global maximum; lowest class index wins across columns, lowest row
        // wins within a column.
        double best = kNegInf;
        std::size_t best_col = 0;
        std::size_t best_row = 0;
        for (std::size_t i = 0; i < cols; ++i) {
            for (std::size_t k = 0; k < rows; ++k) {
                if (q.at(k, i) > best) {
                    best = q.at(k, i);
                    best_col = i;
                    best_row = k;
                }
            }
        }
        if (best == kNegInf) {
            break;
        }

        // Claim [j, j+claimed) while the points are unlabeled, up to t_i and
        // the end of the task. A zero-length claim still retires the column.
        const std::size_t j = best_row;
        const std::size_t t = lengths[best_col];
        std::size_t claimed = 0;
        while (claimed < t && j + claimed < rows && z[j + claimed] == Labeling::kGap) {
            ++claimed;
        }
        for (std::size_t k = 0; k < claimed; ++k) {
            z[j + k] = static_cast<int>(best_col);
        }
        for (std::size_t k = 0; k < rows; ++k) {
            q.at(k, best_col) = kNegInf;
        }
        for (std::size_t k = j; k < j + claimed; ++k) {
            for (std::size_t i = 0; i < cols; ++i) {
                q.at(k, i) = kNegInf;
            }
        }
    }
    return Labeling(std::move(z), cols);
}

}  // namespace corrseg

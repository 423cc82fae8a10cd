#include "corrseg/types.hpp"

#include <cmath>
#include <unordered_set>

namespace corrseg {

Trajectory::Trajectory(std::size_t length, std::size_t dim, std::vector<double> values)
    : length_(length), dim_(dim), values_(std::move(values)) {
    if (length_ < 2) {
        throw std::invalid_argument("trajectory requires T >= 2");
    }
    if (dim_ < 1) {
        throw std::invalid_argument("trajectory requires d >= 1");
    }
    if (values_.size() != length_ * dim_) {
        throw std::invalid_argument("trajectory storage size does not match T x d");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("trajectory contains a non-finite value");
        }
    }
}

Trajectory Trajectory::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.size() < 2) {
        throw std::invalid_argument("trajectory requires T >= 2");
    }
    const std::size_t dim = rows.front().size();
    std::vector<double> flat;
    flat.reserve(rows.size() * dim);
    for (std::size_t t = 0; t < rows.size(); ++t) {
        if (rows[t].size() != dim) {
            throw std::invalid_argument("trajectory rows have inconsistent dimension at row " +
                                        std::to_string(t));
        }
        flat.insert(flat.end(), rows[t].begin(), rows[t].end());
    }
    return Trajectory(rows.size(), dim, std::move(flat));
}

SubTaskLibrary::SubTaskLibrary(std::vector<Entry> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw std::invalid_argument("sub-task library requires M >= 1");
    }
    std::unordered_set<std::string> seen;
    const std::size_t d = entries_.front().demo.dim();
    for (const Entry& e : entries_) {
        if (e.name.empty()) {
            throw std::invalid_argument("sub-task names must be non-empty");
        }
        if (!seen.insert(e.name).second) {
            throw std::invalid_argument("duplicate sub-task name: " + e.name);
        }
        if (e.demo.dim() != d) {
            throw std::invalid_argument("sub-task '" + e.name +
                                        "' dimension differs from the rest of the library");
        }
    }
}

std::vector<std::size_t> SubTaskLibrary::lengths() const {
    std::vector<std::size_t> out;
    out.reserve(entries_.size());
    for (const Entry& e : entries_) {
        out.push_back(e.demo.size());
    }
    return out;
}

std::vector<std::string> SubTaskLibrary::names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const Entry& e : entries_) {
        out.push_back(e.name);
    }
    return out;
}

SimilarityProfile::SimilarityProfile(std::size_t subtask_index, std::vector<double> values)
    : subtask_index_(subtask_index), values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("similarity profile must be non-empty");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("similarity profile contains a non-finite value");
        }
    }
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), values_(rows * cols, kNegInf) {
    if (rows_ == 0 || cols_ == 0) {
        throw std::invalid_argument("Q matrix requires T >= 1 and M >= 1");
    }
}

Labeling::Labeling(std::vector<int> classes, std::size_t num_classes)
    : classes_(std::move(classes)), num_classes_(num_classes) {
    if (classes_.empty()) {
        throw std::invalid_argument("labeling must be non-empty");
    }
    for (int c : classes_) {
        if (c < kGap || (c >= 0 && static_cast<std::size_t>(c) >= num_classes_)) {
            throw std::invalid_argument("labeling entry out of range: " + std::to_string(c));
        }
    }
}

std::vector<Run> runs_from_labeling(const Labeling& labeling) {
    std::vector<Run> runs;
    const std::vector<int>& z = labeling.classes();
    std::size_t begin = 0;
    for (std::size_t k = 1; k <= z.size(); ++k) {
        if (k == z.size() || z[k] != z[begin]) {
            if (z[begin] != Labeling::kGap) {
                runs.push_back({z[begin], begin, k});
            }
            begin = k;
        }
    }
    return runs;
}

SegmentationResult make_segmentation_result(Labeling labeling,
                                            std::vector<std::optional<std::size_t>> starts,
                                            const std::vector<std::size_t>& lengths) {
    if (starts.size() != lengths.size()) {
        throw std::invalid_argument("one predicted start slot per sub-task required");
    }
    const std::size_t t_total = labeling.size();
    for (std::size_t i = 0; i < starts.size(); ++i) {
        if (!starts[i]) {
            continue;
        }
        if (lengths[i] > t_total || *starts[i] > t_total - lengths[i]) {
            throw std::invalid_argument("predicted start out of range for sub-task " +
                                        std::to_string(i));
        }
    }
    std::vector<Run> runs = runs_from_labeling(labeling);
    return SegmentationResult{std::move(labeling), std::move(starts), std::move(runs)};
}

}  // namespace corrseg
